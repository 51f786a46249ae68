//! Number formatting shared by the text, CSV and JSON outputs.

use serde_json::{json, Value};

/// Six significant digits, trailing zeros dropped; exponent notation outside 1e-5..1e6.
pub fn sig6(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.5e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let e: i32 = exp.parse().expect("integer exponent");
    if (-5..6).contains(&e) {
        trim_zeros(format!("{:.*}", (5 - e).max(0) as usize, x))
    } else {
        format!("{}e{e}", trim_zeros(mantissa.to_string()))
    }
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

/// CSV / text cell: empty when undefined.
pub fn cell(x: Option<f64>) -> String {
    x.map(sig6).unwrap_or_default()
}

/// JSON number carrying the same six digits as the text and CSV outputs, or null.
pub fn json_num(x: Option<f64>) -> Value {
    match x {
        Some(v) if v.is_finite() => sig6(v).parse::<f64>().map(|p| json!(p)).unwrap_or(Value::Null),
        _ => Value::Null,
    }
}

/// Full precision value for the "raw" field.
pub fn json_raw(x: Option<f64>) -> Value {
    match x {
        Some(v) if v.is_finite() => json!(v),
        _ => Value::Null,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_digits() {
        assert_eq!(sig6(2.048801), "2.0488");
        assert_eq!(sig6(-0.7800631), "-0.780063");
        assert_eq!(sig6(1.0), "1");
        assert_eq!(sig6(9.9999996), "10");
        assert_eq!(sig6(123456.7), "123457");
        assert_eq!(sig6(1234567.0), "1.23457e6");
        assert_eq!(sig6(1.5e-7), "1.5e-7");
        assert_eq!(sig6(0.00012345678), "0.000123457");
    }

    #[test]
    fn json_matches_text() {
        assert_eq!(json_num(Some(2.048801)).to_string(), "2.0488");
        assert_eq!(json_num(None), Value::Null);
    }
}
