use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Exact fraction over arbitrary-precision integers, always kept in lowest
/// terms with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Sign as -1, 0 or +1.
pub fn sign_of(q: &Rational) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_negative() {
        -1
    } else {
        1
    }
}

/// Serializes a rational as `{"num": "<digits>", "den": "<digits>"}`.
///
/// Decimal strings keep arbitrary-precision values lossless in JSON.
#[derive(Clone, Copy, Debug)]
pub struct RationalJson<'a>(pub &'a Rational);

impl Serialize for RationalJson<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Rational", 2)?;
        st.serialize_field("num", &self.0.numer().to_string())?;
        st.serialize_field("den", &self.0.denom().to_string())?;
        st.end()
    }
}

/// For `#[serde(serialize_with = "...")]` on `Rational` fields.
pub fn serialize_rational<S: Serializer>(q: &Rational, serializer: S) -> Result<S::Ok, S::Error> {
    RationalJson(q).serialize(serializer)
}

/// For `Option<Rational>` fields; `None` becomes `null`.
pub fn serialize_opt_rational<S: Serializer>(
    q: &Option<Rational>,
    serializer: S,
) -> Result<S::Ok, S::Error> {
    q.as_ref().map(RationalJson).serialize(serializer)
}

/// For `Vec<Rational>` fields.
pub fn serialize_rationals<S: Serializer>(
    qs: &[Rational],
    serializer: S,
) -> Result<S::Ok, S::Error> {
    serializer.collect_seq(qs.iter().map(RationalJson))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fractions_are_normalized() {
        let q = ratio(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert_eq!(sign_of(&q), -1);
        assert_eq!(sign_of(&int(0)), 0);
    }

    #[test]
    fn arithmetic_is_exact() {
        let third = ratio(1, 3);
        let sum = &third + &third + &third;
        assert_eq!(sum, int(1));
    }
}
