use std::fmt;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{invalid, Result};
use crate::exactalg::{int, Rational, RationalJson};

/// The divisor `aH - (b/2)Δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorClass {
    pub a: Rational,
    pub b: Rational,
}

impl DivisorClass {
    pub fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Self::new(int(a), int(b))
    }

    /// `a/b`, the class scaled to `(a/b)H - (1/2)Δ`.
    pub fn slope(&self) -> Option<Rational> {
        (self.b != int(0)).then(|| &self.a / &self.b)
    }

    /// Coefficient of `Δ` with its sign, i.e. `-b/2`.
    pub fn delta_coefficient(&self) -> Rational {
        -&self.b / int(2)
    }

    /// Ratio of the `H` coefficient to the magnitude of the `Δ` coefficient, `2a/b`.
    pub fn h_to_delta_ratio(&self) -> Option<Rational> {
        self.slope().map(|q| q * int(2))
    }

    /// The class divided by `b`, when `b > 0`.
    pub fn normalized(&self) -> Option<DivisorClass> {
        (self.b > int(0)).then(|| DivisorClass::new(&self.a / &self.b, int(1)))
    }
}

fn coefficient(q: &Rational, symbol: &str) -> String {
    if *q == int(1) {
        symbol.to_string()
    } else {
        format!("{q}{symbol}")
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let half = &self.b / int(2);
        let h = coefficient(&self.a, "H");
        if half == int(0) {
            write!(f, "{h}")
        } else if half > int(0) {
            write!(f, "{h} - {}", coefficient(&half, "Δ"))
        } else {
            write!(f, "{h} + {}", coefficient(&-half, "Δ"))
        }
    }
}

impl Serialize for DivisorClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("DivisorClass", 4)?;
        st.serialize_field("a", &RationalJson(&self.a))?;
        st.serialize_field("b", &RationalJson(&self.b))?;
        st.serialize_field("slope", &self.slope().as_ref().map(RationalJson))?;
        st.serialize_field("class", &self.to_string())?;
        st.end()
    }
}

/// The curve class `xα + yβ`, with `C·H = x` and `C·Δ = -2y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveClass {
    pub x: Rational,
    pub y: Rational,
}

impl CurveClass {
    /// The class with the given intersection numbers against `H` and `Δ`.
    pub fn from_intersections(dot_h: Rational, dot_delta: Rational) -> Self {
        Self {
            x: dot_h,
            y: -dot_delta / int(2),
        }
    }

    pub fn dot_h(&self) -> Rational {
        self.x.clone()
    }

    pub fn dot_delta(&self) -> Rational {
        -&self.y * int(2)
    }

    /// `(C·Δ)/(C·H)`.
    pub fn slope(&self) -> Option<Rational> {
        (self.x != int(0)).then(|| self.dot_delta() / &self.x)
    }
}

impl Serialize for CurveClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("CurveClass", 4)?;
        st.serialize_field("alpha", &RationalJson(&self.x))?;
        st.serialize_field("beta", &RationalJson(&self.y))?;
        st.serialize_field("dot_h", &RationalJson(&self.dot_h()))?;
        st.serialize_field("dot_delta", &RationalJson(&self.dot_delta()))?;
        st.end()
    }
}

/// `D·C = a(C·H) - (b/2)(C·Δ)`.
pub fn pair(d: &DivisorClass, c: &CurveClass) -> Rational {
    &d.a * c.dot_h() - &d.b / int(2) * c.dot_delta()
}

/// `(r^2 - r + s)H - (r/2)Δ`, the class attached to a Steiner bundle.
pub fn steiner_divisor(r: u64, s: u64) -> Result<DivisorClass> {
    if s > r {
        return invalid(format!("need 0 <= s <= r, got r={r}, s={s}"));
    }
    let (r, s) = (r as i64, s as i64);
    Ok(DivisorClass::from_ints(r * r - r + s, r))
}

/// `(r^2 + r + s - 1)H - ((r+2)/2)Δ`, the class attached to a kernel bundle.
pub fn kernel_divisor(r: u64, s: u64) -> Result<DivisorClass> {
    if s == 0 || s > r {
        return invalid(format!("need 1 <= s <= r, got r={r}, s={s}"));
    }
    let (r, s) = (r as i64, s as i64);
    Ok(DivisorClass::from_ints(r * r + r + s - 1, r + 2))
}

/// `n` points moving in a pencil on a smooth plane curve of degree `d`.
pub fn pencil_curve(n: u64, d: u64) -> Result<CurveClass> {
    if d == 0 {
        return invalid("curve degree must be positive");
    }
    let (n, d) = (n as i64, d as i64);
    Ok(CurveClass::from_intersections(
        int(d),
        int(d * (d - 3) + 2 * n),
    ))
}

/// A moving curve of points on a nodal plane curve.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct NodalCurve {
    pub class: CurveClass,
    /// Number of nodes.
    pub m: i64,
    /// `C·Δ` is the equality case of a lower bound.
    pub delta_is_lower_bound: bool,
}

/// Points on a nodal curve of degree `2r - 1`, valid for `0 <= s < r/2`.
pub fn nodal_pencil_curve(r: u64, s: u64) -> Result<NodalCurve> {
    if 2 * s >= r {
        return invalid(format!("need 0 <= s < r/2, got r={r}, s={s}"));
    }
    let (r, s) = (r as i64, s as i64);
    let n = r * (r + 1) / 2 + s;
    Ok(NodalCurve {
        class: CurveClass::from_intersections(
            int(2 * r - 1),
            int(2 * (2 * r * r - 3 * r + 2 * s + 1)),
        ),
        m: r * r - (r - 1) - n,
        delta_is_lower_bound: true,
    })
}

/// Points on a nodal curve of degree `2r + 5`, the dual construction for
/// `r/2 < s <= r`.
pub fn quadric_pencil_curve(r: u64, s: u64) -> Result<NodalCurve> {
    if 2 * s <= r || s > r {
        return invalid(format!("need r/2 < s <= r, got r={r}, s={s}"));
    }
    let (r, s) = (r as i64, s as i64);
    let n = r * (r + 1) / 2 + s;
    Ok(NodalCurve {
        class: CurveClass::from_intersections(
            int(2 * r + 5),
            int(2 * (2 * r * r + 3 * r + 2 * s - 2)),
        ),
        m: (r + 3) * (r + 3) - (r + 2) - n,
        delta_is_lower_bound: true,
    })
}
