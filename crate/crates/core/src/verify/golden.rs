//! The frozen list of cells expected to come out Flagged at suite defaults.

use std::collections::BTreeSet;

use serde::Serialize;

use super::VerificationReport;

pub const GOLDEN_SUSPECTS: &str = include_str!("../../golden/suspects.txt");

/// `"<family> <kind> <relation> <n> <sourceId>"`
pub fn suspect_key(r: &VerificationReport) -> String {
    format!(
        "{} {} {} {} {}",
        r.task.family,
        r.task.kind,
        r.task.relation,
        r.task.n,
        r.source_id.as_deref().unwrap_or("-")
    )
}

/// Non-comment lines of the embedded golden file.
pub fn golden_suspects() -> BTreeSet<String> {
    parse(GOLDEN_SUSPECTS)
}

fn parse(text: &str) -> BTreeSet<String> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split_whitespace().collect::<Vec<_>>().join(" "))
        .collect()
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GoldenDiff {
    /// flagged now but not in the golden list
    pub unexpected: Vec<String>,
    /// in the golden list but no longer flagged
    pub missing: Vec<String>,
}

impl GoldenDiff {
    pub fn is_clean(&self) -> bool {
        self.unexpected.is_empty() && self.missing.is_empty()
    }
}

pub fn compare_golden(flagged: &[String], golden: &BTreeSet<String>) -> GoldenDiff {
    let got: BTreeSet<String> = flagged.iter().cloned().collect();
    GoldenDiff {
        unexpected: got.difference(golden).cloned().collect(),
        missing: golden.difference(&got).cloned().collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_skips_comments_and_normalises_spaces() {
        let g = parse("# header\n\nSD  enhanced conjugacy 3 Thm5.8.i.alt\n");
        assert_eq!(g.len(), 1);
        assert!(g.contains("SD enhanced conjugacy 3 Thm5.8.i.alt"));
        let d = compare_golden(&["D power order 3 X".into()], &g);
        assert_eq!(d.unexpected, vec!["D power order 3 X".to_string()]);
        assert_eq!(d.missing.len(), 1);
        assert!(!d.is_clean());
    }
}
