//! Generalized Kauffman states and their gradings.
//!
//! A state picks one allowed corner at every vertex so that each region
//! other than the two beside the marked edge receives exactly one corner.
//! At a singular vertex the top corner `B` is not allowed and the bottom
//! corner comes in two flavours, `D+` and `D-`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde_json::json;

use crate::diagram::{Diagram, VertexKind};
use crate::error::{Error, Result};
use crate::faces::{compute_faces, FaceSet, Quadrant, QuadrantPos};
use crate::laurent::HalfLaurent;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Corner {
    A,
    B,
    C,
    D,
    DPlus,
    DMinus,
}

impl Corner {
    pub fn quadrant(self) -> QuadrantPos {
        match self {
            Corner::A => QuadrantPos::A,
            Corner::B => QuadrantPos::B,
            Corner::C => QuadrantPos::C,
            Corner::D | Corner::DPlus | Corner::DMinus => QuadrantPos::D,
        }
    }

    /// Corners available at a vertex, in enumeration order.
    pub fn allowed(kind: VertexKind) -> &'static [Corner] {
        match kind {
            VertexKind::Singular => &[Corner::A, Corner::C, Corner::DPlus, Corner::DMinus],
            _ => &[Corner::A, Corner::B, Corner::C, Corner::D],
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Corner::A => "A",
            Corner::B => "B",
            Corner::C => "C",
            Corner::D => "D",
            Corner::DPlus => "D+",
            Corner::DMinus => "D-",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Local gradings at a corner: `twice_s` is twice the Alexander grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LocalGrading {
    pub twice_s: i64,
    pub maslov: i64,
}

impl LocalGrading {
    const fn new(twice_s: i64, maslov: i64) -> Self {
        Self { twice_s, maslov }
    }

    /// `(-1)^M T^S`
    pub fn weight(self) -> HalfLaurent {
        let sign = if self.maslov.rem_euclid(2) == 0 { 1 } else { -1 };
        HalfLaurent::monomial(sign, self.twice_s)
    }
}

/// Local Alexander and Maslov gradings for every (vertex kind, corner)
/// pair. The local weight is `(-1)^M T^S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerWeights {
    table: [[Option<LocalGrading>; 6]; 3],
}

impl Default for CornerWeights {
    fn default() -> Self {
        Self::standard()
    }
}

impl CornerWeights {
    pub fn standard() -> Self {
        let g = |s, m| Some(LocalGrading::new(s, m));
        let zero = g(0, 0);
        let mut table = [[None; 6]; 3];
        // A, B, C, D, D+, D-
        table[VertexKind::Positive as usize] = [zero, g(1, 0), zero, g(-1, -1), None, None];
        table[VertexKind::Negative as usize] = [zero, g(-1, 0), zero, g(1, 1), None, None];
        // M = 2S at every singular corner
        table[VertexKind::Singular as usize] = [zero, None, zero, None, g(1, 1), g(-1, -1)];
        Self { table }
    }

    pub fn get(&self, kind: VertexKind, corner: Corner) -> Option<LocalGrading> {
        self.table[kind as usize][corner.index()]
    }

    /// Replaces one entry. Used to build deliberately wrong tables for
    /// negative controls.
    pub fn with_entry(mut self, kind: VertexKind, corner: Corner, g: LocalGrading) -> Self {
        self.table[kind as usize][corner.index()] = Some(g);
        self
    }

    /// Standard table with the singular `D+` corner's Maslov grading
    /// shifted by one, which flips the sign of its weight.
    pub fn corrupted() -> Self {
        Self::standard().with_entry(VertexKind::Singular, Corner::DPlus, LocalGrading::new(1, 0))
    }

    fn local(&self, kind: VertexKind, corner: Corner) -> LocalGrading {
        self.get(kind, corner)
            .unwrap_or_else(|| panic!("corner {corner} is not allowed at a {kind:?} vertex"))
    }

    /// Total weight of a vertex's corners in one quadrant, summed over the
    /// flavours that share it.
    pub fn quadrant_weight(&self, kind: VertexKind, pos: QuadrantPos) -> HalfLaurent {
        Corner::allowed(kind)
            .iter()
            .filter(|c| c.quadrant() == pos)
            .map(|&c| self.local(kind, c).weight())
            .sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KauffmanState {
    /// Corner chosen at each vertex, by vertex id.
    pub corners: Vec<Corner>,
    /// Region occupied by each vertex.
    pub faces: Vec<usize>,
    /// Twice the Alexander grading.
    pub twice_s: i64,
    /// Maslov grading.
    pub maslov: i64,
}

impl KauffmanState {
    /// `N = M - 2S`
    pub fn n_grading(&self) -> i64 {
        self.maslov - self.twice_s
    }

    /// `(-1)^M T^S`
    pub fn weight(&self) -> HalfLaurent {
        LocalGrading::new(self.twice_s, self.maslov).weight()
    }
}

/// Counts of states by `(Maslov, 2 * Alexander)` grading.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BigradedTable {
    counts: BTreeMap<(i64, i64), u64>,
}

impl BigradedTable {
    pub fn from_states(states: &[KauffmanState]) -> Self {
        let mut t = Self::default();
        for s in states {
            t.add(s.maslov, s.twice_s, 1);
        }
        t
    }

    pub fn add(&mut self, maslov: i64, twice_s: i64, n: u64) {
        if n > 0 {
            *self.counts.entry((maslov, twice_s)).or_default() += n;
        }
    }

    pub fn get(&self, maslov: i64, twice_s: i64) -> u64 {
        self.counts.get(&(maslov, twice_s)).copied().unwrap_or(0)
    }

    /// `((M, 2S), count)` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = ((i64, i64), u64)> + '_ {
        self.counts.iter().map(|(k, v)| (*k, *v))
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// `sum (-1)^M count T^S`
    pub fn euler(&self) -> HalfLaurent {
        HalfLaurent::from_terms(self.counts.iter().map(|(&(m, k), &c)| {
            let c = c as i64;
            (k, if m.rem_euclid(2) == 0 { c } else { -c })
        }))
    }

    /// Same table moved by `twice_shift` in doubled Alexander grading.
    pub fn shift_alexander(&self, twice_shift: i64) -> Self {
        Self {
            counts: self
                .counts
                .iter()
                .map(|(&(m, k), &c)| ((m, k + twice_shift), c))
                .collect(),
        }
    }

    /// `[[M, twoS, count], ...]`
    pub fn to_json(&self) -> serde_json::Value {
        json!(self.counts.iter().map(|(&(m, k), &c)| json!([m, k, c])).collect::<Vec<_>>())
    }
}

/// For every vertex, the (corner position, region) pairs that land in an
/// eligible region. Positions are in `A, B, C, D` order and `B` is
/// skipped at singular vertices.
fn candidates(d: &Diagram, f: &FaceSet) -> Vec<Vec<(QuadrantPos, usize)>> {
    const ORDER: [QuadrantPos; 4] = [QuadrantPos::A, QuadrantPos::B, QuadrantPos::C, QuadrantPos::D];
    d.vertices()
        .iter()
        .enumerate()
        .map(|(v, vx)| {
            ORDER
                .iter()
                .filter(|&&p| !(vx.kind.is_singular() && p == QuadrantPos::B))
                .map(|&p| (p, f.face_of(Quadrant { vertex: v, position: p })))
                .filter(|&(_, face)| f.is_eligible(face))
                .collect()
        })
        .collect()
}

struct Search<'a> {
    cand: &'a [Vec<(QuadrantPos, usize)>],
    /// vertices with a corner in each region
    by_face: Vec<Vec<usize>>,
    assigned: Vec<Option<(QuadrantPos, usize)>>,
    used: Vec<bool>,
    eligible: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(cand: &'a [Vec<(QuadrantPos, usize)>], f: &FaceSet) -> Self {
        let mut by_face = vec![Vec::new(); f.len()];
        for (v, cs) in cand.iter().enumerate() {
            for &(_, face) in cs {
                if by_face[face].last() != Some(&v) {
                    by_face[face].push(v);
                }
            }
        }
        Self {
            cand,
            by_face,
            assigned: vec![None; cand.len()],
            used: vec![false; f.len()],
            eligible: f.eligible_faces().collect(),
        }
    }

    fn open_candidates(&self, v: usize) -> impl Iterator<Item = (QuadrantPos, usize)> + '_ {
        self.cand[v].iter().copied().filter(|&(_, face)| !self.used[face])
    }

    /// Unassigned vertex with the fewest open corners, lowest id first.
    /// `None` when complete; `Some(None)` on a dead end.
    fn pick(&self) -> Option<Option<usize>> {
        let mut best: Option<(usize, usize)> = None;
        for v in 0..self.cand.len() {
            if self.assigned[v].is_some() {
                continue;
            }
            let n = self.open_candidates(v).count();
            if n == 0 {
                return Some(None);
            }
            if best.is_none_or(|(_, m)| n < m) {
                best = Some((v, n));
            }
        }
        best.map(|(v, _)| Some(v))
    }

    fn region_starved(&self) -> bool {
        self.eligible.iter().any(|&face| {
            !self.used[face]
                && !self.by_face[face].iter().any(|&v| {
                    self.assigned[v].is_none() && self.cand[v].iter().any(|&(_, f)| f == face)
                })
        })
    }

    fn branches(&self) -> Option<(usize, Vec<(QuadrantPos, usize)>)> {
        match self.pick() {
            None | Some(None) => None,
            Some(Some(v)) => Some((v, self.open_candidates(v).collect())),
        }
    }

    fn run(&mut self, out: &mut Vec<Vec<(QuadrantPos, usize)>>) {
        if self.region_starved() {
            return;
        }
        match self.pick() {
            None => out.push(self.assigned.iter().map(|a| a.unwrap()).collect()),
            Some(None) => {}
            Some(Some(v)) => {
                let opts: Vec<_> = self.open_candidates(v).collect();
                for (pos, face) in opts {
                    self.assign(v, pos, face);
                    self.run(out);
                    self.unassign(v, face);
                }
            }
        }
    }

    fn assign(&mut self, v: usize, pos: QuadrantPos, face: usize) {
        self.assigned[v] = Some((pos, face));
        self.used[face] = true;
    }

    fn unassign(&mut self, v: usize, face: usize) {
        self.assigned[v] = None;
        self.used[face] = false;
    }

    fn fork(&self) -> Self {
        Self {
            cand: self.cand,
            by_face: self.by_face.clone(),
            assigned: self.assigned.clone(),
            used: self.used.clone(),
            eligible: self.eligible.clone(),
        }
    }
}

/// All generalized Kauffman states, sorted by corner sequence.
pub fn enumerate_states(d: &Diagram, f: &FaceSet) -> Vec<KauffmanState> {
    enumerate_states_with(d, f, &CornerWeights::standard())
}

pub fn enumerate_states_with(d: &Diagram, f: &FaceSet, w: &CornerWeights) -> Vec<KauffmanState> {
    if d.num_vertices() == 0 {
        return vec![KauffmanState {
            corners: Vec::new(),
            faces: Vec::new(),
            twice_s: 0,
            maslov: 0,
        }];
    }
    let cand = candidates(d, f);
    let root = Search::new(&cand, f);
    if root.eligible.len() != d.num_vertices() {
        return Vec::new();
    }

    // split at the first branching level
    let matchings: Vec<Vec<(QuadrantPos, usize)>> = match root.branches() {
        None => Vec::new(),
        Some((v, opts)) => opts
            .into_par_iter()
            .flat_map_iter(|(pos, face)| {
                let mut s = root.fork();
                s.assign(v, pos, face);
                let mut out = Vec::new();
                s.run(&mut out);
                out
            })
            .collect(),
    };

    let mut states: Vec<KauffmanState> = matchings
        .into_iter()
        .flat_map(|m| expand(d, &m, w))
        .collect();
    states.sort_by(|a, b| a.corners.cmp(&b.corners));
    states
}

/// Splits every singular `D` assignment into `D+` and `D-`.
fn expand(d: &Diagram, m: &[(QuadrantPos, usize)], w: &CornerWeights) -> Vec<KauffmanState> {
    let mut partial: Vec<Vec<Corner>> = vec![Vec::with_capacity(m.len())];
    for (vx, &(pos, _)) in d.vertices().iter().zip(m) {
        let flavours: &[Corner] = match (vx.kind.is_singular(), pos) {
            (true, QuadrantPos::D) => &[Corner::DPlus, Corner::DMinus],
            (_, QuadrantPos::A) => &[Corner::A],
            (_, QuadrantPos::B) => &[Corner::B],
            (_, QuadrantPos::C) => &[Corner::C],
            (false, QuadrantPos::D) => &[Corner::D],
        };
        if flavours.len() == 1 {
            for p in &mut partial {
                p.push(flavours[0]);
            }
        } else {
            partial = partial
                .into_iter()
                .flat_map(|p| {
                    flavours.iter().map(move |&c| {
                        let mut q = p.clone();
                        q.push(c);
                        q
                    })
                })
                .collect();
        }
    }
    let faces: Vec<usize> = m.iter().map(|&(_, face)| face).collect();
    partial
        .into_iter()
        .map(|corners| {
            let (twice_s, maslov) = d
                .vertices()
                .iter()
                .zip(&corners)
                .map(|(vx, &c)| w.local(vx.kind, c))
                .fold((0, 0), |(s, m), g| (s + g.twice_s, m + g.maslov));
            KauffmanState {
                corners,
                faces: faces.clone(),
                twice_s,
                maslov,
            }
        })
        .collect()
}

/// Largest diagram the brute-force oracle accepts.
pub const ORACLE_VERTEX_LIMIT: usize = 12;

/// Counts states by trying every injection of vertices into the eligible
/// regions and multiplying, per vertex, the number of allowed corners it
/// has in its assigned region (a singular `D` corner counts twice).
pub fn count_states_oracle(d: &Diagram, f: &FaceSet) -> Result<u64> {
    let n = d.num_vertices();
    if n > ORACLE_VERTEX_LIMIT {
        return Err(Error::InstanceTooLarge {
            vertices: n,
            limit: ORACLE_VERTEX_LIMIT,
        });
    }
    let regions: Vec<usize> = f.eligible_faces().collect();
    if regions.len() != n {
        return Ok(0);
    }
    // multiplicity[v][j]: ways vertex v can sit in regions[j]
    let multiplicity: Vec<Vec<u64>> = d
        .vertices()
        .iter()
        .enumerate()
        .map(|(v, vx)| {
            regions
                .iter()
                .map(|&r| {
                    Corner::allowed(vx.kind)
                        .iter()
                        .filter(|c| {
                            f.face_of(Quadrant {
                                vertex: v,
                                position: c.quadrant(),
                            }) == r
                        })
                        .count() as u64
                })
                .collect()
        })
        .collect();

    fn go(v: usize, used: &mut [bool], mult: &[Vec<u64>]) -> u64 {
        if v == mult.len() {
            return 1;
        }
        let mut total = 0;
        for j in 0..used.len() {
            if used[j] || mult[v][j] == 0 {
                continue;
            }
            used[j] = true;
            total += mult[v][j] * go(v + 1, used, mult);
            used[j] = false;
        }
        total
    }
    Ok(go(0, &mut vec![false; n], &multiplicity))
}

/// Histogram of `(M, 2S)` over all states of `d` at its marked edge.
pub fn generator_table(d: &Diagram) -> Result<BigradedTable> {
    let f = compute_faces(d)?;
    Ok(BigradedTable::from_states(&enumerate_states(d, &f)))
}

/// One row per state: corner letters, `S`, `M`, `N`, tab-separated.
pub fn states_tsv(d: &Diagram, states: &[KauffmanState]) -> String {
    let mut out = String::new();
    let header: Vec<String> = (0..d.num_vertices()).map(|v| format!("v{v}")).collect();
    out.push_str(&header.join("\t"));
    if !header.is_empty() {
        out.push('\t');
    }
    out.push_str("S\tM\tN\n");
    for s in states {
        for c in &s.corners {
            out.push_str(c.symbol());
            out.push('\t');
        }
        out.push_str(&format!("{}\t{}\t{}\n", half(s.twice_s), s.maslov, s.n_grading()));
    }
    out
}

/// `k/2` written as an integer when `k` is even.
pub fn half(k: i64) -> String {
    if k % 2 == 0 {
        (k / 2).to_string()
    } else {
        format!("{k}/2")
    }
}
