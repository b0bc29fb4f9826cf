//! Laurent polynomials in `T^(1/2)` with big-integer coefficients.
//!
//! Exponents are stored doubled: the key `k` stands for `T^(k/2)`, so the
//! half-integer Alexander gradings never leave the integers.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::ParsePolyError;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HalfLaurent {
    terms: BTreeMap<i64, BigInt>,
}

/// Rendering style for [`HalfLaurent::render`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderStyle {
    /// Powers of `T`, with odd doubled exponents written as `T^(k/2)`.
    T,
    /// Powers of `t = T^(1/2)`; exponents are the doubled ones.
    THalf,
}

impl HalfLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `coeff * T^(twice_exp/2)`.
    pub fn monomial(coeff: impl Into<BigInt>, twice_exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(twice_exp, coeff.into());
        p
    }

    /// Builds a polynomial from `(doubled exponent, coefficient)` pairs;
    /// repeated exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c.into());
        }
        p
    }

    /// `T^(1/2)`
    pub fn t_half() -> Self {
        Self::monomial(1, 1)
    }

    /// `(1 - T)^ell`
    pub fn one_minus_t_power(ell: u32) -> Self {
        let base = Self::from_terms([(0, 1), (2, -1)]);
        base.pow(ell)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn add_term(&mut self, k: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `T^(twice_exp/2)`.
    pub fn coeff(&self, twice_exp: i64) -> BigInt {
        self.terms.get(&twice_exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Nonzero terms in ascending doubled-exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Substitutes `T -> T^-1`.
    pub fn invert_t(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (-k, c.clone())).collect(),
        }
    }

    /// Multiplies by `T^(shift/2)`.
    pub fn shift(&self, twice_shift: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k + twice_shift, c.clone()))
                .collect(),
        }
    }

    /// Value at `T = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Invariant under `T -> T^-1`.
    pub fn is_symmetric(&self) -> bool {
        *self == self.invert_t()
    }

    pub fn render(&self, style: RenderStyle) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (k, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mag = c.abs();
            let var = render_power(*k, style);
            match var {
                None => out.push_str(&mag.to_string()),
                Some(v) if mag.is_one() => out.push_str(&v),
                Some(v) => {
                    out.push_str(&mag.to_string());
                    out.push('*');
                    out.push_str(&v);
                }
            }
        }
        out
    }

    /// `[[k, coeff], ...]` sorted by doubled exponent `k`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(k, c)| serde_json::json!([k, bigint_json(c)]))
                .collect(),
        )
    }
}

/// Coefficients that fit in an `i64` are emitted as JSON numbers, larger
/// ones as decimal strings.
pub(crate) fn bigint_json(c: &BigInt) -> serde_json::Value {
    use num_traits::ToPrimitive;
    match c.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::String(c.to_string()),
    }
}

fn render_power(k: i64, style: RenderStyle) -> Option<String> {
    if k == 0 {
        return None;
    }
    Some(match style {
        RenderStyle::T if k % 2 == 0 => match k / 2 {
            1 => "T".to_string(),
            e => format!("T^{e}"),
        },
        RenderStyle::T => format!("T^({k}/2)"),
        RenderStyle::THalf => match k {
            1 => "t".to_string(),
            k => format!("t^{k}"),
        },
    })
}

impl fmt::Display for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(RenderStyle::T))
    }
}

impl FromStr for HalfLaurent {
    type Err = ParsePolyError;

    /// Accepts the output of [`HalfLaurent::render`] in either style.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ParsePolyError::new(s, "empty input"));
        }
        let bytes = compact.as_bytes();
        let mut pieces = Vec::new();
        let mut start = 0;
        let mut depth = 0;
        for (i, &b) in bytes.iter().enumerate() {
            match b {
                b'(' => depth += 1,
                b')' => depth -= 1,
                b'+' | b'-' if i > start && depth == 0 && bytes[i - 1] != b'^' => {
                    pieces.push(&compact[start..i]);
                    start = i;
                }
                _ => {}
            }
        }
        pieces.push(&compact[start..]);

        let mut p = HalfLaurent::zero();
        for piece in pieces {
            let (k, c) = parse_term(piece).ok_or_else(|| ParsePolyError::new(s, piece))?;
            p.add_term(k, c);
        }
        Ok(p)
    }
}

fn parse_term(term: &str) -> Option<(i64, BigInt)> {
    let (sign, body) = match term.as_bytes().first()? {
        b'-' => (-1, &term[1..]),
        b'+' => (1, &term[1..]),
        _ => (1, term),
    };
    let var_at = body.find(['T', 't']);
    let (coeff_str, var) = match var_at {
        Some(i) => (body[..i].trim_end_matches('*'), Some(&body[i..])),
        None => (body, None),
    };
    let coeff: BigInt = if coeff_str.is_empty() {
        if var.is_none() {
            return None;
        }
        BigInt::one()
    } else {
        coeff_str.parse().ok()?
    };
    let k = match var {
        None => 0,
        Some(v) => {
            let doubled = v.starts_with('T');
            let exp = &v[1..];
            let raw = if exp.is_empty() {
                (1, 1)
            } else {
                let e = exp.strip_prefix('^')?;
                match e.strip_prefix('(').and_then(|e| e.strip_suffix(')')) {
                    Some(frac) => {
                        let num = frac.strip_suffix("/2")?;
                        (num.parse::<i64>().ok()?, 2)
                    }
                    None => (e.parse::<i64>().ok()?, 1),
                }
            };
            match (doubled, raw) {
                (true, (n, 1)) => 2 * n,
                (true, (n, _)) => n,
                (false, (n, 1)) => n,
                (false, _) => return None,
            }
        }
    };
    Some((k, coeff * sign))
}

impl Add for &HalfLaurent {
    type Output = HalfLaurent;
    fn add(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for HalfLaurent {
    type Output = HalfLaurent;
    fn add(mut self, rhs: HalfLaurent) -> HalfLaurent {
        self += &rhs;
        self
    }
}

impl AddAssign<&HalfLaurent> for HalfLaurent {
    fn add_assign(&mut self, rhs: &HalfLaurent) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, c.clone());
        }
    }
}

impl Neg for &HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        HalfLaurent {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Neg for HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        -&self
    }
}

impl Sub for &HalfLaurent {
    type Output = HalfLaurent;
    fn sub(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, -c);
        }
        out
    }
}

impl Sub for HalfLaurent {
    type Output = HalfLaurent;
    fn sub(self, rhs: HalfLaurent) -> HalfLaurent {
        &self - &rhs
    }
}

impl Mul for &HalfLaurent {
    type Output = HalfLaurent;
    fn mul(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = HalfLaurent::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl Mul for HalfLaurent {
    type Output = HalfLaurent;
    fn mul(self, rhs: HalfLaurent) -> HalfLaurent {
        &self * &rhs
    }
}

impl std::iter::Sum for HalfLaurent {
    fn sum<I: Iterator<Item = HalfLaurent>>(iter: I) -> Self {
        iter.fold(HalfLaurent::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}
