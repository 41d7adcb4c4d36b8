//! Float formatting for the JSON documents.
//!
//! Every float is written with 17 significant digits in exponent form, so
//! the text round-trips to the same `f64` and is stable across platforms.

use serde::{Serialize, Serializer};
use serde_json::value::RawValue;
use urtetrad::C64;

/// A real number serialized with 17 significant digits. Non-finite values
/// become `null`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Real(pub f64);

pub fn format_real(x: f64) -> String {
    // Normalize -0.0 so that identical reports do not differ in a sign bit.
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_none();
        }
        let raw = RawValue::from_string(format_real(self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

/// A complex number as `[re, im]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Complex(pub C64);

impl Serialize for Complex {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [Real(self.0.re), Real(self.0.im)].serialize(s)
    }
}

/// `serialize_with` adapter for plain `f64` fields.
pub fn real<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    Real(*x).serialize(s)
}

pub fn reals<const N: usize>(v: [f64; N]) -> [Real; N] {
    v.map(Real)
}

pub fn complexes<const N: usize>(v: [C64; N]) -> [Complex; N] {
    v.map(Complex)
}

pub fn to_string<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("documents serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits_round_trip() {
        for x in [0.1, -1.0 / 3.0, 1e120, std::f64::consts::FRAC_1_SQRT_2, 3.0] {
            let s = format_real(x);
            assert_eq!(s.parse::<f64>().unwrap(), x);
            let mantissa = s.split('e').next().unwrap();
            let digits = mantissa.chars().filter(|c| c.is_ascii_digit()).count();
            assert_eq!(digits, 17, "{s}");
        }
        assert_eq!(format_real(-0.0), format_real(0.0));
    }

    #[test]
    fn valid_json() {
        let text = to_string(&(Real(3.0), Complex(C64::new(0.5, -2.0)), Real(f64::NAN)));
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v[0].as_f64(), Some(3.0));
        assert_eq!(v[1][1].as_f64(), Some(-2.0));
        assert!(v[2].is_null());
    }
}
