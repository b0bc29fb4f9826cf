//! Alexander polynomial of singular diagrams, by state sum and by skein
//! recursion, plus the two Euler characteristics derived from it.

use serde_json::json;

use crate::diagram::{Diagram, ResolveMode, VertexId, VertexKind};
use crate::error::{Error, Result};
use crate::faces::compute_faces;
use crate::laurent::HalfLaurent;
use crate::states::{enumerate_states_with, CornerWeights};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    StateSum,
    Skein,
}

/// Which resolution the skein recursion follows at a singular vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SkeinBranch {
    /// `Δ_K = Δ_{K+} - T^(1/2) Δ_{K°}`
    Plus,
    /// `Δ_K = Δ_{K-} - T^(-1/2) Δ_{K°}`
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderResult {
    pub delta: HalfLaurent,
    pub method: Method,
    /// Number of singular vertices minus one, when there is at least one.
    pub ell: Option<u32>,
}

impl AlexanderResult {
    pub fn compute(d: &Diagram, method: Method) -> Result<Self> {
        let delta = match method {
            Method::StateSum => alexander_state_sum(d)?,
            Method::Skein => alexander_skein(d, SkeinBranch::Plus)?,
        };
        Ok(Self {
            delta,
            method,
            ell: ell(d),
        })
    }
}

fn ell(d: &Diagram) -> Option<u32> {
    (d.singular_count() as u32).checked_sub(1)
}

/// `Σ_x Π_v Z_v(x)` over generalized Kauffman states. Split diagrams give 0.
pub fn alexander_state_sum(d: &Diagram) -> Result<HalfLaurent> {
    alexander_state_sum_with(d, &CornerWeights::standard())
}

pub fn alexander_state_sum_with(d: &Diagram, w: &CornerWeights) -> Result<HalfLaurent> {
    if !d.is_connected() {
        return Ok(HalfLaurent::zero());
    }
    let f = compute_faces(d)?;
    Ok(enumerate_states_with(d, &f, w)
        .iter()
        .map(|s| s.weight())
        .sum())
}

/// Eliminates singular vertices one at a time, lowest id first, and hands
/// nonsingular diagrams to the state sum.
pub fn alexander_skein(d: &Diagram, branch: SkeinBranch) -> Result<HalfLaurent> {
    alexander_skein_with(d, branch, &CornerWeights::standard())
}

pub fn alexander_skein_with(d: &Diagram, branch: SkeinBranch, w: &CornerWeights) -> Result<HalfLaurent> {
    skein(d, branch, w, d.singular_count())
}

fn skein(d: &Diagram, branch: SkeinBranch, w: &CornerWeights, budget: usize) -> Result<HalfLaurent> {
    if !d.is_connected() {
        return Ok(HalfLaurent::zero());
    }
    let Some(v) = d.vertices().iter().position(|x| x.kind.is_singular()) else {
        return alexander_state_sum_with(d, w);
    };
    if budget == 0 {
        return Err(Error::RecursionDepth(d.singular_count()));
    }
    let (mode, twice_exp) = match branch {
        SkeinBranch::Plus => (ResolveMode::Plus, 1),
        SkeinBranch::Minus => (ResolveMode::Minus, -1),
    };
    let signed = d.resolve(v, mode)?.diagram;
    let smoothed = d.resolve(v, ResolveMode::Oriented)?;
    let (a, b) = rayon::join(
        || skein(&signed, branch, w, budget - 1),
        || {
            if smoothed.split {
                Ok(HalfLaurent::zero())
            } else {
                skein(&smoothed.diagram, branch, w, budget - 1)
            }
        },
    );
    Ok(&a? - &(&HalfLaurent::monomial(1, twice_exp) * &b?))
}

/// The three diagrams of a skein triple at `v`: `(K+, K-, K°)`. At an
/// ordinary crossing `K±` switch its sign; at a singular vertex they are
/// its resolutions.
pub fn skein_triple(d: &Diagram, v: VertexId) -> Result<(Diagram, Diagram, Diagram)> {
    d.vertex(v)?;
    let plus = d.with_kind(v, VertexKind::Positive);
    let minus = d.with_kind(v, VertexKind::Negative);
    let smooth = d.resolve(v, ResolveMode::Oriented)?.diagram;
    Ok((plus, minus, smooth))
}

/// Checks `Δ_{K+} - Δ_{K-} = (T^(1/2) - T^(-1/2)) Δ_{K°}` at `v`, with each
/// term evaluated by the state sum.
pub fn classical_skein_check(d: &Diagram, v: VertexId) -> Result<bool> {
    classical_skein_check_with(d, v, &CornerWeights::standard())
}

pub fn classical_skein_check_with(d: &Diagram, v: VertexId, w: &CornerWeights) -> Result<bool> {
    let (plus, minus, smooth) = skein_triple(d, v)?;
    let lhs = &alexander_state_sum_with(&plus, w)? - &alexander_state_sum_with(&minus, w)?;
    let z = HalfLaurent::from_terms([(1, 1), (-1, -1)]);
    let rhs = &z * &alexander_state_sum_with(&smooth, w)?;
    Ok(lhs == rhs)
}

/// Euler characteristic of the minus theory, which equals Δ.
pub fn euler_hfb(d: &Diagram) -> Result<HalfLaurent> {
    alexander_state_sum(d)
}

/// `(1 - T)^ℓ Δ` with `ℓ + 1` singular vertices.
pub fn euler_hfa(d: &Diagram) -> Result<HalfLaurent> {
    let ell = ell(d).ok_or(Error::NoSingularVertex)?;
    Ok(&HalfLaurent::one_minus_t_power(ell) * &alexander_state_sum(d)?)
}

/// Everything the `alexander`/`euler` commands print.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderReport {
    pub delta: HalfLaurent,
    pub ell: Option<u32>,
    pub chi_hfa: Option<HalfLaurent>,
    pub methods_agree: bool,
}

impl AlexanderReport {
    pub fn compute(d: &Diagram) -> Result<Self> {
        let delta = alexander_state_sum(d)?;
        let plus = alexander_skein(d, SkeinBranch::Plus)?;
        let minus = alexander_skein(d, SkeinBranch::Minus)?;
        let ell = ell(d);
        let chi_hfa = ell.map(|l| &HalfLaurent::one_minus_t_power(l) * &delta);
        Ok(Self {
            methods_agree: delta == plus && delta == minus,
            delta,
            ell,
            chi_hfa,
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "delta": self.delta.to_json(),
            "ell": self.ell,
            "chi_hfa": self.chi_hfa.as_ref().map(HalfLaurent::to_json),
            "methods_agree": self.methods_agree,
        })
    }
}
