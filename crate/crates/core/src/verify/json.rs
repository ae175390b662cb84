//! Report serialization with floats pinned to 12 significant digits.

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};

fn round_f64(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    let r: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Rounds every float in the tree; integers are left alone.
pub fn round_json(v: &mut Value) {
    match v {
        Value::Number(num) if num.is_f64() => {
            if let Some(x) = num.as_f64() {
                if let Some(n) = serde_json::Number::from_f64(round_f64(x)) {
                    *num = n;
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_json),
        Value::Object(map) => map.values_mut().for_each(round_json),
        _ => {}
    }
}

pub fn to_rounded_json<T: Serialize>(value: &T) -> Result<Value> {
    let mut v = serde_json::to_value(value).map_err(|e| Error::Io(e.to_string()))?;
    round_json(&mut v);
    Ok(v)
}

pub fn to_rounded_string<T: Serialize>(value: &T) -> Result<String> {
    let v = to_rounded_json(value)?;
    serde_json::to_string_pretty(&v).map_err(|e| Error::Io(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_digits() {
        assert_eq!(round_f64(1.0 / 7.0), 0.142857142857);
        assert_eq!(round_f64(-0.0).to_bits(), 0.0f64.to_bits());
        assert_eq!(round_f64(1e-300), 1e-300);
        let mut v = serde_json::json!({"a": [1.0000000000001, 2], "b": -0.0});
        round_json(&mut v);
        assert_eq!(v.to_string(), r#"{"a":[1.0,2],"b":0.0}"#);
    }
}
