//! Built-in quantales: complete lattices carrying a monoid whose multiplication
//! preserves joins in each variable, together with both residuations.
//!
//! Every scalar is exact. Numeric instances use rationals extended by two
//! infinity sentinels; the Boolean instance uses `bool`. Operations on raw
//! [`Scalar`]s through a [`QuantaleId`] assume the scalars already belong to
//! the instance (matrices validate their entries on construction); the
//! [`QuantaleValue`] wrapper performs the instance check on every call.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{ensure_same, Error, Result};

/// One scalar payload.
///
/// The derived ordering is the *numeric* one on the three numeric variants
/// (`NegInf < Finite(_) < PosInf`), which the numeric instances reinterpret
/// according to their own lattice order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Bool(bool),
    NegInf,
    Finite(BigRational),
    PosInf,
}

impl Scalar {
    pub fn int(n: i64) -> Self {
        Scalar::Finite(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(numer: i64, denom: i64) -> Self {
        Scalar::Finite(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn zero() -> Self {
        Scalar::Finite(BigRational::zero())
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Scalar::Bool(b) => Some(*b),
            _ => None,
        }
    }

    pub fn as_finite(&self) -> Option<&BigRational> {
        match self {
            Scalar::Finite(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_finite_number(&self) -> bool {
        matches!(self, Scalar::Finite(_))
    }

    /// Numeric negation; infinities swap. Booleans are left untouched.
    pub fn negated(&self) -> Self {
        match self {
            Scalar::NegInf => Scalar::PosInf,
            Scalar::PosInf => Scalar::NegInf,
            Scalar::Finite(r) => Scalar::Finite(-r),
            Scalar::Bool(b) => Scalar::Bool(*b),
        }
    }

    /// Canonical literal: lowest-term rationals, `inf` / `-inf`, `true` / `false`.
    pub fn literal(&self) -> String {
        self.to_string()
    }

    /// Lossy decimal rendering for human consumption.
    pub fn decimal(&self) -> String {
        match self {
            Scalar::Finite(r) => {
                let n: f64 = r.numer().to_string().parse().unwrap_or(f64::NAN);
                let d: f64 = r.denom().to_string().parse().unwrap_or(f64::NAN);
                format!("{}", n / d)
            }
            other => other.to_string(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Bool(true) => f.write_str("true"),
            Scalar::Bool(false) => f.write_str("false"),
            Scalar::NegInf => f.write_str("-inf"),
            Scalar::PosInf => f.write_str("inf"),
            Scalar::Finite(r) => write!(f, "{r}"),
        }
    }
}

/// Parses a literal without reference to any quantale.
///
/// Accepts `true`/`false`, `inf`/`+inf`/`-inf`, integers, `p/q` rationals and
/// decimals with an optional exponent (`1.25`, `-3e-2`), all converted exactly.
pub fn parse_scalar_literal(text: &str) -> Option<Scalar> {
    let t = text.trim();
    match t.to_ascii_lowercase().as_str() {
        "true" | "⊤" => return Some(Scalar::Bool(true)),
        "false" | "⊥" => return Some(Scalar::Bool(false)),
        "inf" | "+inf" | "infinity" | "+infinity" | "∞" => return Some(Scalar::PosInf),
        "-inf" | "-infinity" | "-∞" => return Some(Scalar::NegInf),
        _ => {}
    }
    if t.is_empty() {
        return None;
    }
    if let Some((n, d)) = t.split_once('/') {
        let n = BigInt::from_str(n.trim()).ok()?;
        let d = BigInt::from_str(d.trim()).ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Scalar::Finite(BigRational::new(n, d)));
    }
    parse_decimal(t).map(Scalar::Finite)
}

fn parse_decimal(t: &str) -> Option<BigRational> {
    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().ok()?),
        None => (t, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let all: String = format!("{int_part}{frac_part}");
    let mut numer = BigInt::from_str(if all.is_empty() { "0" } else { &all }).ok()?;
    if negative {
        numer = -numer;
    }
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10u32);
    let value = if scale >= 0 {
        BigRational::from_integer(numer * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(numer, num_traits::pow(ten, (-scale) as usize))
    };
    Some(value)
}

/// The seven built-in quantales.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuantaleId {
    /// `({⊥, ⊤}, ⊢, ⊤, ∧)`.
    Boolean,
    /// `([-∞, ∞], ≤, 0, +)`.
    MaxPlus,
    /// `([-∞, ∞], ≥, 0, +)`.
    MinPlus,
    /// `([0, ∞], ≥, 0, +)`, the Lawvere quantale.
    Lawvere,
    /// `([0, ∞], ≥, 0, max)`.
    MinMax,
    /// Max-plus restricted to the integers and both infinities.
    IntMaxPlus,
    /// Lawvere restricted to the nonnegative integers and `∞`.
    IntLawvere,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Direction {
    /// `a ⪯ b` iff `a ≤ b` numerically.
    Ascending,
    /// `a ⪯ b` iff `a ≥ b` numerically.
    Descending,
}

impl QuantaleId {
    pub const ALL: [QuantaleId; 7] = [
        QuantaleId::Boolean,
        QuantaleId::MaxPlus,
        QuantaleId::MinPlus,
        QuantaleId::Lawvere,
        QuantaleId::MinMax,
        QuantaleId::IntMaxPlus,
        QuantaleId::IntLawvere,
    ];

    /// Name used in files and on the command line.
    pub fn name(self) -> &'static str {
        match self {
            QuantaleId::Boolean => "bool",
            QuantaleId::MaxPlus => "max-plus",
            QuantaleId::MinPlus => "min-plus",
            QuantaleId::Lawvere => "lawvere",
            QuantaleId::MinMax => "min-max",
            QuantaleId::IntMaxPlus => "int-max-plus",
            QuantaleId::IntLawvere => "int-lawvere",
        }
    }

    pub fn is_commutative(self) -> bool {
        true
    }

    /// Whether the carrier is finite, so that hulls can be enumerated.
    pub fn is_enumerable(self) -> bool {
        self == QuantaleId::Boolean
    }

    fn direction(self) -> Direction {
        match self {
            QuantaleId::Boolean | QuantaleId::MaxPlus | QuantaleId::IntMaxPlus => Direction::Ascending,
            _ => Direction::Descending,
        }
    }

    /// The least element `𝟎`.
    pub fn bottom(self) -> Scalar {
        match self {
            QuantaleId::Boolean => Scalar::Bool(false),
            QuantaleId::MaxPlus | QuantaleId::IntMaxPlus => Scalar::NegInf,
            _ => Scalar::PosInf,
        }
    }

    pub fn top(self) -> Scalar {
        match self {
            QuantaleId::Boolean => Scalar::Bool(true),
            QuantaleId::MaxPlus | QuantaleId::IntMaxPlus => Scalar::PosInf,
            QuantaleId::MinPlus => Scalar::NegInf,
            QuantaleId::Lawvere | QuantaleId::MinMax | QuantaleId::IntLawvere => Scalar::zero(),
        }
    }

    /// The monoid unit `I`.
    pub fn unit(self) -> Scalar {
        match self {
            QuantaleId::Boolean => Scalar::Bool(true),
            _ => Scalar::zero(),
        }
    }

    /// Whether `s` is an element of this quantale's carrier.
    pub fn admits(self, s: &Scalar) -> bool {
        let nonneg = |s: &Scalar| match s {
            Scalar::Finite(r) => !r.is_negative(),
            Scalar::PosInf => true,
            _ => false,
        };
        let integral = |s: &Scalar| match s {
            Scalar::Finite(r) => r.is_integer(),
            Scalar::Bool(_) => false,
            _ => true,
        };
        match self {
            QuantaleId::Boolean => matches!(s, Scalar::Bool(_)),
            QuantaleId::MaxPlus | QuantaleId::MinPlus => !matches!(s, Scalar::Bool(_)),
            QuantaleId::Lawvere | QuantaleId::MinMax => nonneg(s),
            QuantaleId::IntMaxPlus => integral(s),
            QuantaleId::IntLawvere => nonneg(s) && integral(s),
        }
    }

    /// Parses a literal and checks it belongs to the carrier.
    pub fn parse(self, text: &str) -> Result<Scalar> {
        parse_scalar_literal(text)
            .filter(|s| self.admits(s))
            .ok_or_else(|| Error::InvalidScalar { literal: text.to_string(), quantale: self })
    }

    pub fn check(self, s: &Scalar) -> Result<()> {
        if self.admits(s) {
            Ok(())
        } else {
            Err(Error::InvalidScalar { literal: s.literal(), quantale: self })
        }
    }

    /// `a ⪯ b`.
    pub fn leq(self, a: &Scalar, b: &Scalar) -> bool {
        match (a, b) {
            (Scalar::Bool(a), Scalar::Bool(b)) => !a || *b,
            _ => match self.direction() {
                Direction::Ascending => a <= b,
                Direction::Descending => a >= b,
            },
        }
    }

    pub fn join2(self, a: &Scalar, b: &Scalar) -> Scalar {
        if self.leq(a, b) {
            b.clone()
        } else {
            a.clone()
        }
    }

    pub fn meet2(self, a: &Scalar, b: &Scalar) -> Scalar {
        if self.leq(a, b) {
            a.clone()
        } else {
            b.clone()
        }
    }

    /// Supremum of a finite family; the empty join is `𝟎`.
    pub fn join<'a, I: IntoIterator<Item = &'a Scalar>>(self, values: I) -> Scalar {
        values.into_iter().fold(self.bottom(), |acc, v| self.join2(&acc, v))
    }

    /// Infimum of a finite family; the empty meet is the top element.
    pub fn meet<'a, I: IntoIterator<Item = &'a Scalar>>(self, values: I) -> Scalar {
        values.into_iter().fold(self.top(), |acc, v| self.meet2(&acc, v))
    }

    /// `y ∘ x`.
    pub fn mul(self, y: &Scalar, x: &Scalar) -> Scalar {
        match self {
            QuantaleId::Boolean => Scalar::Bool(as_bool(y) && as_bool(x)),
            QuantaleId::MaxPlus | QuantaleId::IntMaxPlus => max_plus_add(y, x),
            QuantaleId::MinPlus | QuantaleId::Lawvere | QuantaleId::IntLawvere => min_plus_add(y, x),
            QuantaleId::MinMax => std::cmp::max(y, x).clone(),
        }
    }

    /// Right extension `z ↙ x`: the largest `w` with `w ∘ x ⪯ z`.
    pub fn rext(self, z: &Scalar, x: &Scalar) -> Scalar {
        match self {
            QuantaleId::Boolean => Scalar::Bool(!as_bool(x) || as_bool(z)),
            QuantaleId::MaxPlus | QuantaleId::IntMaxPlus => max_plus_sub(z, x),
            QuantaleId::MinPlus => min_plus_sub(z, x),
            QuantaleId::Lawvere | QuantaleId::IntLawvere => truncated_sub(z, x),
            QuantaleId::MinMax => {
                if x >= z {
                    Scalar::zero()
                } else {
                    z.clone()
                }
            }
        }
    }

    /// Right lifting `y ↘ z`: the largest `w` with `y ∘ w ⪯ z`.
    ///
    /// Every built-in instance is commutative, so this is `z ↙ y`.
    pub fn rlift(self, y: &Scalar, z: &Scalar) -> Scalar {
        self.rext(z, y)
    }

    /// A finite sample of the carrier: the whole carrier for `bool`, five
    /// points including every infinity otherwise.
    pub fn sample_carrier(self) -> Vec<Scalar> {
        match self {
            QuantaleId::Boolean => vec![Scalar::Bool(false), Scalar::Bool(true)],
            QuantaleId::MaxPlus | QuantaleId::MinPlus => {
                vec![Scalar::NegInf, Scalar::int(-1), Scalar::zero(), Scalar::int(2), Scalar::PosInf]
            }
            QuantaleId::Lawvere => {
                vec![Scalar::zero(), Scalar::ratio(1, 2), Scalar::int(1), Scalar::int(3), Scalar::PosInf]
            }
            QuantaleId::MinMax => {
                vec![Scalar::zero(), Scalar::int(1), Scalar::ratio(5, 2), Scalar::int(7), Scalar::PosInf]
            }
            QuantaleId::IntMaxPlus => {
                vec![Scalar::NegInf, Scalar::int(-2), Scalar::zero(), Scalar::int(3), Scalar::PosInf]
            }
            QuantaleId::IntLawvere => {
                vec![Scalar::zero(), Scalar::int(1), Scalar::int(2), Scalar::int(5), Scalar::PosInf]
            }
        }
    }
}

fn as_bool(s: &Scalar) -> bool {
    match s {
        Scalar::Bool(b) => *b,
        other => panic!("numeric scalar {other} in a Boolean context"),
    }
}

// Max-plus extended addition: -∞ annihilates first, then +∞ absorbs.
fn max_plus_add(y: &Scalar, x: &Scalar) -> Scalar {
    match (y, x) {
        (Scalar::NegInf, _) | (_, Scalar::NegInf) => Scalar::NegInf,
        (Scalar::PosInf, _) | (_, Scalar::PosInf) => Scalar::PosInf,
        (Scalar::Finite(a), Scalar::Finite(b)) => Scalar::Finite(a + b),
        _ => panic!("Boolean scalar in a numeric context"),
    }
}

// Min-plus extended addition: +∞ (the bottom here) annihilates first.
fn min_plus_add(y: &Scalar, x: &Scalar) -> Scalar {
    match (y, x) {
        (Scalar::PosInf, _) | (_, Scalar::PosInf) => Scalar::PosInf,
        (Scalar::NegInf, _) | (_, Scalar::NegInf) => Scalar::NegInf,
        (Scalar::Finite(a), Scalar::Finite(b)) => Scalar::Finite(a + b),
        _ => panic!("Boolean scalar in a numeric context"),
    }
}

fn max_plus_sub(z: &Scalar, x: &Scalar) -> Scalar {
    match (z, x) {
        (_, Scalar::NegInf) | (Scalar::PosInf, _) => Scalar::PosInf,
        (_, Scalar::PosInf) | (Scalar::NegInf, _) => Scalar::NegInf,
        (Scalar::Finite(u), Scalar::Finite(t)) => Scalar::Finite(u - t),
        _ => panic!("Boolean scalar in a numeric context"),
    }
}

fn min_plus_sub(z: &Scalar, x: &Scalar) -> Scalar {
    match (z, x) {
        (_, Scalar::PosInf) | (Scalar::NegInf, _) => Scalar::NegInf,
        (_, Scalar::NegInf) | (Scalar::PosInf, _) => Scalar::PosInf,
        (Scalar::Finite(u), Scalar::Finite(t)) => Scalar::Finite(u - t),
        _ => panic!("Boolean scalar in a numeric context"),
    }
}

fn truncated_sub(z: &Scalar, x: &Scalar) -> Scalar {
    match (z, x) {
        (_, Scalar::PosInf) => Scalar::zero(),
        (Scalar::PosInf, _) => Scalar::PosInf,
        (Scalar::Finite(u), Scalar::Finite(t)) => {
            let d = u - t;
            if d.is_negative() {
                Scalar::zero()
            } else {
                Scalar::Finite(d)
            }
        }
        _ => panic!("scalar outside [0, ∞] in the Lawvere quantale"),
    }
}

impl fmt::Display for QuantaleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for QuantaleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        QuantaleId::ALL.into_iter().find(|q| q.name() == s).ok_or_else(|| Error::UnknownQuantale(s.to_string()))
    }
}

/// A scalar tagged with its quantale; every binary operation checks that
/// both arguments come from the same instance.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuantaleValue {
    quantale: QuantaleId,
    scalar: Scalar,
}

impl QuantaleValue {
    pub fn new(quantale: QuantaleId, scalar: Scalar) -> Result<Self> {
        quantale.check(&scalar)?;
        Ok(QuantaleValue { quantale, scalar })
    }

    pub fn parse(quantale: QuantaleId, text: &str) -> Result<Self> {
        Ok(QuantaleValue { quantale, scalar: quantale.parse(text)? })
    }

    pub fn unit(quantale: QuantaleId) -> Self {
        QuantaleValue { quantale, scalar: quantale.unit() }
    }

    pub fn bottom(quantale: QuantaleId) -> Self {
        QuantaleValue { quantale, scalar: quantale.bottom() }
    }

    pub fn top(quantale: QuantaleId) -> Self {
        QuantaleValue { quantale, scalar: quantale.top() }
    }

    pub fn quantale(&self) -> QuantaleId {
        self.quantale
    }

    pub fn scalar(&self) -> &Scalar {
        &self.scalar
    }

    pub fn into_scalar(self) -> Scalar {
        self.scalar
    }

    fn lift(&self, scalar: Scalar) -> Self {
        QuantaleValue { quantale: self.quantale, scalar }
    }

    /// `self ∘ x`.
    pub fn mul(&self, x: &QuantaleValue) -> Result<Self> {
        ensure_same(self.quantale, x.quantale)?;
        Ok(self.lift(self.quantale.mul(&self.scalar, &x.scalar)))
    }

    /// `self ↙ x`.
    pub fn rext(&self, x: &QuantaleValue) -> Result<Self> {
        ensure_same(self.quantale, x.quantale)?;
        Ok(self.lift(self.quantale.rext(&self.scalar, &x.scalar)))
    }

    /// `self ↘ z`.
    pub fn rlift(&self, z: &QuantaleValue) -> Result<Self> {
        ensure_same(self.quantale, z.quantale)?;
        Ok(self.lift(self.quantale.rlift(&self.scalar, &z.scalar)))
    }

    pub fn leq(&self, other: &QuantaleValue) -> Result<bool> {
        ensure_same(self.quantale, other.quantale)?;
        Ok(self.quantale.leq(&self.scalar, &other.scalar))
    }
}

impl fmt::Display for QuantaleValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.scalar.fmt(f)
    }
}

fn check_family(q: QuantaleId, values: &[QuantaleValue]) -> Result<()> {
    values.iter().try_for_each(|v| ensure_same(q, v.quantale))
}

/// Supremum in `q`; the empty family yields `𝟎`.
pub fn join(q: QuantaleId, values: &[QuantaleValue]) -> Result<QuantaleValue> {
    check_family(q, values)?;
    Ok(QuantaleValue { quantale: q, scalar: q.join(values.iter().map(|v| &v.scalar)) })
}

/// Infimum in `q`; the empty family yields the top element.
pub fn meet(q: QuantaleId, values: &[QuantaleValue]) -> Result<QuantaleValue> {
    check_family(q, values)?;
    Ok(QuantaleValue { quantale: q, scalar: q.meet(values.iter().map(|v| &v.scalar)) })
}
