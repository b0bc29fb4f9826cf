//! Oriented 4-valent diagrams with positive, negative and singular vertices.
//!
//! Every vertex lists its four edge-ends counterclockwise as
//! `(inL, inR, outR, outL)`. The two incoming ends are adjacent, so the
//! region between them is the bottom quadrant and the region between the
//! outgoing ends is the top quadrant.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};

use serde_json::json;

use crate::error::{Error, Result};
use crate::faces;

pub type EdgeLabel = u32;
pub type VertexId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexKind {
    Positive,
    Negative,
    Singular,
}

impl VertexKind {
    pub fn token(self) -> &'static str {
        match self {
            VertexKind::Positive => "X+",
            VertexKind::Negative => "X-",
            VertexKind::Singular => "S",
        }
    }

    pub fn is_singular(self) -> bool {
        self == VertexKind::Singular
    }
}

/// Position of an edge-end around a vertex, in counterclockwise order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    InL = 0,
    InR = 1,
    OutR = 2,
    OutL = 3,
}

impl Slot {
    pub const ALL: [Slot; 4] = [Slot::InL, Slot::InR, Slot::OutR, Slot::OutL];

    pub fn from_index(i: usize) -> Slot {
        Slot::ALL[i % 4]
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn is_incoming(self) -> bool {
        matches!(self, Slot::InL | Slot::InR)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub kind: VertexKind,
    /// `[inL, inR, outR, outL]`
    pub slots: [EdgeLabel; 4],
}

impl Vertex {
    pub fn new(kind: VertexKind, slots: [EdgeLabel; 4]) -> Self {
        Self { kind, slots }
    }

    pub fn edge(&self, slot: Slot) -> EdgeLabel {
        self.slots[slot.index()]
    }
}

/// One end of an edge: a vertex together with the slot it occupies there.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeEnd {
    pub vertex: VertexId,
    pub slot: Slot,
}

/// Where an edge leaves (`tail`, an outgoing slot) and arrives (`head`, an
/// incoming slot).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeEnds {
    pub tail: EdgeEnd,
    pub head: EdgeEnd,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    name: String,
    vertices: Vec<Vertex>,
    edges: BTreeSet<EdgeLabel>,
    marked: EdgeLabel,
}

/// Mode for [`Diagram::resolve`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResolveMode {
    Plus,
    Minus,
    Oriented,
}

/// Output of [`Diagram::resolve`]. Oriented resolution can disconnect the
/// diagram; `split` records that.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolution {
    pub diagram: Diagram,
    pub split: bool,
}

impl Diagram {
    /// Builds and validates a diagram. The edge set is derived from the
    /// slots; a vertex-free diagram is the unknot with the single edge
    /// `marked`.
    pub fn new(name: impl Into<String>, vertices: Vec<Vertex>, marked: EdgeLabel) -> Result<Self> {
        let edges = if vertices.is_empty() {
            BTreeSet::from([marked])
        } else {
            vertices.iter().flat_map(|v| v.slots).collect()
        };
        let d = Self {
            name: name.into(),
            vertices,
            edges,
            marked,
        };
        d.validate()?;
        Ok(d)
    }

    /// The vertex-free unknot, with its one edge labelled 1.
    pub fn unknot() -> Self {
        Self {
            name: "unknot".into(),
            vertices: Vec::new(),
            edges: BTreeSet::from([1]),
            marked: 1,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.vertices.is_empty() {
            if self.edges.len() != 1 {
                return Err(Error::Disconnected);
            }
        } else {
            let mut incoming = BTreeSet::new();
            let mut outgoing = BTreeSet::new();
            for v in &self.vertices {
                for slot in Slot::ALL {
                    let e = v.edge(slot);
                    let (set, what) = if slot.is_incoming() {
                        (&mut incoming, "incoming")
                    } else {
                        (&mut outgoing, "outgoing")
                    };
                    if !set.insert(e) {
                        return Err(Error::DuplicateSlot(e, what));
                    }
                }
            }
            if let Some(e) = incoming.difference(&outgoing).next() {
                return Err(Error::DanglingEdge(*e, "outgoing"));
            }
            if let Some(e) = outgoing.difference(&incoming).next() {
                return Err(Error::DanglingEdge(*e, "incoming"));
            }
        }
        if !self.edges.contains(&self.marked) {
            return Err(Error::InvalidMarkedEdge(self.marked));
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        if !self.vertices.is_empty() {
            let f = faces::trace_faces(self).len() as i64;
            let euler = self.vertices.len() as i64 - self.edges.len() as i64 + f;
            if euler != 2 {
                return Err(Error::NonPlanar { euler });
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, v: VertexId) -> Result<&Vertex> {
        self.vertices.get(v).ok_or(Error::NoSuchVertex(v))
    }

    pub fn edges(&self) -> &BTreeSet<EdgeLabel> {
        &self.edges
    }

    pub fn marked_edge(&self) -> EdgeLabel {
        self.marked
    }

    /// Same diagram with the marked point moved to edge `e`.
    pub fn with_marked_edge(&self, e: EdgeLabel) -> Result<Self> {
        if !self.edges.contains(&e) {
            return Err(Error::InvalidMarkedEdge(e));
        }
        let mut d = self.clone();
        d.marked = e;
        Ok(d)
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn singular_count(&self) -> usize {
        self.vertices.iter().filter(|v| v.kind.is_singular()).count()
    }

    /// Every vertex singular (vacuously true for the unknot).
    pub fn is_planar_singular(&self) -> bool {
        self.vertices.iter().all(|v| v.kind.is_singular())
    }

    /// Tail and head of every edge attached to a vertex. Vertex-free loops
    /// are absent from the map.
    pub fn edge_ends(&self) -> BTreeMap<EdgeLabel, EdgeEnds> {
        let mut tails = BTreeMap::new();
        let mut heads = BTreeMap::new();
        for (vid, v) in self.vertices.iter().enumerate() {
            for slot in Slot::ALL {
                let end = EdgeEnd { vertex: vid, slot };
                if slot.is_incoming() {
                    heads.insert(v.edge(slot), end);
                } else {
                    tails.insert(v.edge(slot), end);
                }
            }
        }
        tails
            .into_iter()
            .filter_map(|(e, tail)| heads.get(&e).map(|&head| (e, EdgeEnds { tail, head })))
            .collect()
    }

    /// Number of connected components, counting vertex-free loops.
    pub fn components(&self) -> usize {
        if self.vertices.is_empty() {
            return self.edges.len();
        }
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let ends = self.edge_ends();
        for ee in ends.values() {
            let (a, b) = (find(&mut parent, ee.tail.vertex), find(&mut parent, ee.head.vertex));
            if a != b {
                parent[a] = b;
            }
        }
        let vertex_components = (0..self.vertices.len())
            .filter(|&x| find(&mut parent, x) == x)
            .count();
        let free_loops = self.edges.len() - ends.len();
        vertex_components + free_loops
    }

    pub fn is_connected(&self) -> bool {
        self.components() == 1
    }

    /// Sets the kind of a crossing to positive/negative (`Plus`/`Minus`), or
    /// smooths the vertex along the orientation (`Oriented`), splicing
    /// `inL -> outL` and `inR -> outR`. Merged edges keep the smaller label.
    pub fn resolve(&self, v: VertexId, mode: ResolveMode) -> Result<Resolution> {
        let vertex = *self.vertex(v)?;
        match mode {
            ResolveMode::Plus | ResolveMode::Minus => {
                if !vertex.kind.is_singular() {
                    return Err(Error::NotSingular(v));
                }
                let kind = if mode == ResolveMode::Plus {
                    VertexKind::Positive
                } else {
                    VertexKind::Negative
                };
                let diagram = self.with_kind(v, kind);
                Ok(Resolution { diagram, split: false })
            }
            ResolveMode::Oriented => Ok(self.smooth(v)),
        }
    }

    /// Copy with vertex `v` given `kind`, slots untouched.
    pub fn with_kind(&self, v: VertexId, kind: VertexKind) -> Diagram {
        let mut d = self.clone();
        d.vertices[v].kind = kind;
        d
    }

    fn smooth(&self, v: VertexId) -> Resolution {
        let [in_l, in_r, out_r, out_l] = self.vertices[v].slots;
        let mut vertices = self.vertices.clone();
        vertices.remove(v);
        let mut edges = self.edges.clone();
        let mut marked = self.marked;
        let mut pending = [out_r, in_r];

        let mut merge = |a: EdgeLabel, b: EdgeLabel, vertices: &mut Vec<Vertex>, pending: &mut [EdgeLabel]| {
            let (keep, drop) = if a <= b { (a, b) } else { (b, a) };
            if keep == drop {
                return;
            }
            for vx in vertices.iter_mut() {
                for s in vx.slots.iter_mut() {
                    if *s == drop {
                        *s = keep;
                    }
                }
            }
            for p in pending.iter_mut() {
                if *p == drop {
                    *p = keep;
                }
            }
            if marked == drop {
                marked = keep;
            }
            edges.remove(&drop);
        };
        merge(in_l, out_l, &mut vertices, &mut pending);
        let [r_out, r_in] = pending;
        merge(r_in, r_out, &mut vertices, &mut []);

        let diagram = Diagram {
            name: format!("{}/o{}", self.name, v),
            vertices,
            edges,
            marked,
        };
        let split = !diagram.is_connected();
        Resolution { diagram, split }
    }

    /// Turns an ordinary crossing into a singular vertex.
    pub fn singularize(&self, v: VertexId) -> Result<Diagram> {
        let vertex = self.vertex(v)?;
        if vertex.kind.is_singular() {
            return Err(Error::AlreadySingular(v));
        }
        Ok(self.with_kind(v, VertexKind::Singular))
    }

    /// Relabels edges `1, 2, ...` in order of first appearance in the slot
    /// lists, with vertex-free loops last. Two diagrams that differ only by
    /// edge names have equal canonical forms.
    pub fn canonical(&self) -> Diagram {
        let mut map = BTreeMap::new();
        let mut next = 1;
        let order = self
            .vertices
            .iter()
            .flat_map(|v| v.slots)
            .chain(self.edges.iter().copied());
        for e in order {
            map.entry(e).or_insert_with(|| {
                let l = next;
                next += 1;
                l
            });
        }
        Diagram {
            name: self.name.clone(),
            vertices: self
                .vertices
                .iter()
                .map(|v| Vertex::new(v.kind, v.slots.map(|e| map[&e])))
                .collect(),
            edges: self.edges.iter().map(|e| map[e]).collect(),
            marked: map[&self.marked],
        }
    }

    /// `.skd` source that parses back to this diagram.
    pub fn to_skd(&self) -> String {
        let mut out = String::new();
        if !self.name.is_empty() {
            writeln!(out, "diagram {}", self.name).unwrap();
        }
        if self.vertices.is_empty() {
            out.push_str("unknot\n");
        }
        for v in &self.vertices {
            let [a, b, c, d] = v.slots;
            writeln!(out, "{} {a} {b} {c} {d}", v.kind.token()).unwrap();
        }
        writeln!(out, "Q {}", self.marked).unwrap();
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "name": self.name,
            "vertices": self.vertices.iter().map(|v| json!({
                "kind": v.kind.token(),
                "slots": v.slots,
            })).collect::<Vec<_>>(),
            "q": self.marked,
            "edges": self.edges.len(),
        })
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_skd())
    }
}

/// Closure of a braid on `strands` strands. Letter `i` is the generator
/// crossing positions `i` and `i + 1` (1-based), positive for `i > 0`.
/// `singular` holds 1-based word positions that become singular vertices.
/// The marked edge is the closure arc of the first strand.
pub fn from_braid(strands: usize, word: &[i32], singular: &BTreeSet<usize>) -> Result<Diagram> {
    for &letter in word {
        let i = letter.unsigned_abs() as usize;
        if letter == 0 || i >= strands {
            return Err(Error::InvalidBraidLetter { letter, strands });
        }
    }
    if let Some(&p) = singular.iter().find(|&&p| p == 0 || p > word.len()) {
        return Err(Error::InvalidMaskPosition(p));
    }
    if strands == 0 {
        return Err(Error::InvalidBraidLetter { letter: 0, strands });
    }

    let mut next: EdgeLabel = strands as EdgeLabel + 1;
    let mut current: Vec<EdgeLabel> = (1..=strands as EdgeLabel).collect();
    let mut vertices = Vec::with_capacity(word.len());
    for (pos, &letter) in word.iter().enumerate() {
        let i = letter.unsigned_abs() as usize - 1;
        let kind = if singular.contains(&(pos + 1)) {
            VertexKind::Singular
        } else if letter > 0 {
            VertexKind::Positive
        } else {
            VertexKind::Negative
        };
        let (out_r, out_l) = (next, next + 1);
        next += 2;
        vertices.push(Vertex::new(kind, [current[i], current[i + 1], out_r, out_l]));
        current[i] = out_l;
        current[i + 1] = out_r;
    }

    // close up: the top edge at position k is the bottom edge at position k
    let rename: BTreeMap<EdgeLabel, EdgeLabel> = current
        .iter()
        .zip(1..)
        .filter(|(top, bottom)| *top != bottom)
        .map(|(&top, bottom)| (top, bottom))
        .collect();
    for v in &mut vertices {
        for s in v.slots.iter_mut() {
            if let Some(&b) = rename.get(s) {
                *s = b;
            }
        }
    }
    let edges: BTreeSet<EdgeLabel> = vertices
        .iter()
        .flat_map(|v| v.slots)
        .chain(1..=strands as EdgeLabel)
        .collect();
    let d = Diagram {
        name: braid_name(strands, word, singular),
        vertices,
        edges,
        marked: 1,
    };
    let components = d.components();
    if components != 1 {
        return Err(Error::SplitClosure(components));
    }
    Diagram::new(d.name, d.vertices, d.marked)
}

fn braid_name(strands: usize, word: &[i32], singular: &BTreeSet<usize>) -> String {
    let w: Vec<String> = word.iter().map(i32::to_string).collect();
    let mut name = format!("braid{strands}[{}]", w.join(","));
    if !singular.is_empty() {
        let s: Vec<String> = singular.iter().map(usize::to_string).collect();
        write!(name, "s[{}]", s.join(",")).unwrap();
    }
    name
}

/// Parses `.skd` source.
pub fn parse_diagram(text: &str) -> Result<Diagram> {
    let mut name = None;
    let mut vertices = Vec::new();
    let mut unknot_line = None;
    let mut braid: Option<(usize, Diagram)> = None;
    let mut marked: Option<(usize, EdgeLabel)> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let tokens = tokenize(raw);
        let (col, head) = tokens[0];
        let syntax = |column: usize, message: String| Error::Syntax {
            line: line_no,
            column,
            message,
        };
        match head {
            "diagram" => {
                let rest = raw[col - 1 + head.len()..].trim();
                if rest.is_empty() {
                    return Err(syntax(col, "`diagram` needs a name".into()));
                }
                name = Some(rest.to_string());
            }
            "unknot" => {
                if tokens.len() != 1 {
                    return Err(syntax(tokens[1].0, "unexpected token after `unknot`".into()));
                }
                unknot_line = Some(line_no);
            }
            "X+" | "X-" | "S" => {
                let kind = match head {
                    "X+" => VertexKind::Positive,
                    "X-" => VertexKind::Negative,
                    _ => VertexKind::Singular,
                };
                if tokens.len() != 5 {
                    let column = tokens.get(5).map_or(col + head.len(), |t| t.0);
                    return Err(syntax(column, format!("`{head}` takes exactly four edge labels")));
                }
                let mut slots = [0; 4];
                for (slot, &(c, tok)) in slots.iter_mut().zip(&tokens[1..]) {
                    *slot = parse_label(tok).ok_or_else(|| {
                        syntax(c, format!("invalid edge label `{tok}`"))
                    })?;
                }
                vertices.push(Vertex::new(kind, slots));
            }
            "Q" => {
                if marked.is_some() {
                    return Err(syntax(col, "more than one `Q` line".into()));
                }
                if tokens.len() != 2 {
                    return Err(syntax(col, "`Q` takes exactly one edge label".into()));
                }
                let (c, tok) = tokens[1];
                let e = parse_label(tok)
                    .ok_or_else(|| syntax(c, format!("invalid edge label `{tok}`")))?;
                marked = Some((line_no, e));
            }
            "braid" => {
                if braid.is_some() {
                    return Err(syntax(col, "more than one `braid` line".into()));
                }
                let d = parse_braid_line(&tokens).map_err(|(column, message)| Error::Syntax {
                    line: line_no,
                    column,
                    message,
                })?;
                braid = Some((line_no, d?));
            }
            other => return Err(syntax(col, format!("unknown directive `{other}`"))),
        }
    }

    let diagram = match (unknot_line, braid) {
        (Some(line), _) if !vertices.is_empty() => {
            return Err(Error::Syntax {
                line,
                column: 1,
                message: "`unknot` must be the only vertex line".into(),
            })
        }
        (Some(line), Some(_)) => {
            return Err(Error::Syntax {
                line,
                column: 1,
                message: "`unknot` cannot be combined with `braid`".into(),
            })
        }
        (None, Some((line, _))) if !vertices.is_empty() => {
            return Err(Error::Syntax {
                line,
                column: 1,
                message: "`braid` cannot be combined with vertex lines".into(),
            })
        }
        (None, Some((_, d))) => match marked {
            Some((_, e)) => d.with_marked_edge(e)?,
            None => d,
        },
        (Some(_), None) => match marked {
            Some((_, 1)) => Diagram::unknot(),
            Some((_, e)) => return Err(Error::InvalidMarkedEdge(e)),
            None => return Err(Error::MissingMarkedEdge),
        },
        (None, None) => {
            if vertices.is_empty() {
                return Err(Error::Syntax {
                    line: text.lines().count().max(1),
                    column: 1,
                    message: "no vertices, `unknot` or `braid` line".into(),
                });
            }
            let (_, e) = marked.ok_or(Error::MissingMarkedEdge)?;
            Diagram::new(String::new(), vertices, e)?
        }
    };
    Ok(match name {
        Some(n) => diagram.with_name(n),
        None => diagram,
    })
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokenize(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn parse_label(tok: &str) -> Option<EdgeLabel> {
    tok.parse::<EdgeLabel>().ok().filter(|&e| e > 0)
}

type BraidLine = std::result::Result<Result<Diagram>, (usize, String)>;

fn parse_braid_line(tokens: &[(usize, &str)]) -> BraidLine {
    let usage = "expected `braid <n> <w1,...,wk> [sing p1,...,pm]`";
    if tokens.len() != 3 && tokens.len() != 5 {
        return Err((tokens[0].0, usage.into()));
    }
    let (c, n) = tokens[1];
    let strands: usize = n
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or((c, format!("invalid strand count `{n}`")))?;
    let (c, w) = tokens[2];
    let word = w
        .split(',')
        .map(|x| x.parse::<i32>().ok().filter(|&l| l != 0))
        .collect::<Option<Vec<_>>>()
        .ok_or((c, format!("invalid braid word `{w}`")))?;
    let mut mask = BTreeSet::new();
    if tokens.len() == 5 {
        if tokens[3].1 != "sing" {
            return Err((tokens[3].0, usage.into()));
        }
        let (c, p) = tokens[4];
        for x in p.split(',') {
            let pos = x
                .parse::<usize>()
                .map_err(|_| (c, format!("invalid singular position `{x}`")))?;
            mask.insert(pos);
        }
    }
    Ok(from_braid(strands, &word, &mask))
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "X+ 1 2 3 4\nX+ 4 3 5 6\nX+ 6 5 2 1\nQ 1\n";

    #[test]
    fn parses_unknot() {
        let d = parse_diagram("unknot\nQ 1\n").unwrap();
        assert_eq!(d.num_vertices(), 0);
        assert_eq!(d.num_edges(), 1);
        assert_eq!(d.marked_edge(), 1);
    }

    #[test]
    fn parses_singular_kink() {
        let d = parse_diagram("# kink\nS 1 2 2 1\nQ 1\n").unwrap();
        assert_eq!(d.num_vertices(), 1);
        assert_eq!(d.num_edges(), 2);
        assert_eq!(d.vertices()[0].kind, VertexKind::Singular);
    }

    #[test]
    fn parses_trefoil() {
        let d = parse_diagram(TREFOIL).unwrap();
        assert_eq!(d.num_vertices(), 3);
        assert_eq!(d.num_edges(), 6);
        assert_eq!(d.components(), 1);
    }

    #[test]
    fn rejects_swapped_closure_as_nonplanar() {
        // closing the last crossing with outR/outL swapped cannot be drawn
        let err = parse_diagram("X+ 1 2 3 4\nX+ 4 3 5 6\nX+ 6 5 1 2\nQ 1\n").unwrap_err();
        assert!(matches!(err, Error::NonPlanar { .. }), "{err:?}");
    }

    #[test]
    fn braid_trefoil_matches_literal() {
        let b = from_braid(2, &[1, 1, 1], &BTreeSet::new()).unwrap();
        let lit = parse_diagram(TREFOIL).unwrap();
        assert_eq!(b.canonical().vertices(), lit.canonical().vertices());
        assert_eq!(b.num_vertices(), 3);
        assert!(b.vertices().iter().all(|v| v.kind == VertexKind::Positive));
    }

    #[test]
    fn braid_torus_link_singularized() {
        let all: BTreeSet<usize> = (1..=6).collect();
        let d = from_braid(3, &[1, 2, 1, 2, 1, 2], &all).unwrap();
        assert_eq!(d.num_vertices(), 6);
        assert_eq!(d.num_edges(), 12);
        assert_eq!(d.singular_count(), 6);
        assert!(d.is_planar_singular());
    }

    #[test]
    fn smallest_singular_closure_is_the_kink() {
        let d = from_braid(2, &[1], &BTreeSet::from([1])).unwrap();
        assert!(d.is_connected());
        let kink = parse_diagram("S 1 2 2 1\nQ 1\n").unwrap();
        assert_eq!(d.vertices(), kink.vertices());
    }

    #[test]
    fn braid_errors() {
        let none = BTreeSet::new();
        assert!(matches!(
            from_braid(2, &[2], &none),
            Err(Error::InvalidBraidLetter { letter: 2, .. })
        ));
        assert!(matches!(
            from_braid(2, &[0], &none),
            Err(Error::InvalidBraidLetter { .. })
        ));
        assert!(matches!(from_braid(3, &[1, 1], &none), Err(Error::SplitClosure(2))));
        assert!(matches!(
            from_braid(2, &[1], &BTreeSet::from([2])),
            Err(Error::InvalidMaskPosition(2))
        ));
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(
            parse_diagram("X+ 1 2 3 4\nQ 1\n"),
            Err(Error::DanglingEdge(..))
        ));
        assert!(matches!(
            parse_diagram("X+ 1 1 2 3\nQ 1\n"),
            Err(Error::DuplicateSlot(1, "incoming"))
        ));
        assert!(matches!(
            parse_diagram("S 1 2 2 1\nS 3 4 4 3\nQ 1\n"),
            Err(Error::Disconnected)
        ));
        assert!(matches!(parse_diagram("S 1 2 2 1\n"), Err(Error::MissingMarkedEdge)));
        assert!(matches!(
            parse_diagram("S 1 2 2 1\nQ 7\n"),
            Err(Error::InvalidMarkedEdge(7))
        ));
        assert!(matches!(parse_diagram("unknot\nQ 2\n"), Err(Error::InvalidMarkedEdge(2))));
    }

    #[test]
    fn syntax_errors_report_position() {
        let err = parse_diagram("# c\nS 1 2 x 1\nQ 1\n").unwrap_err();
        assert_eq!(
            err,
            Error::Syntax {
                line: 2,
                column: 7,
                message: "invalid edge label `x`".into()
            }
        );
        let err = parse_diagram("S 1 2 2 1\nQ 1\nQ 2\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 3, .. }));
        let err = parse_diagram("  Y 1 2 3 4\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 1, column: 3, .. }));
        let err = parse_diagram("unknot\nS 1 2 2 1\nQ 1\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 1, .. }));
    }

    #[test]
    fn braid_line() {
        let d = parse_diagram("diagram t33\nbraid 3 1,2,1,2,1,2 sing 1,2,3,4,5,6\n").unwrap();
        assert_eq!(d.name(), "t33");
        assert_eq!(d.singular_count(), 6);
        let d = parse_diagram("braid 2 1,1,1\nQ 3\n").unwrap();
        assert_eq!(d.marked_edge(), 3);
        assert!(matches!(
            parse_diagram("braid 2 1,x\n"),
            Err(Error::Syntax { line: 1, column: 9, .. })
        ));
    }

    #[test]
    fn resolve_plus_minus() {
        let kink = parse_diagram("S 1 2 2 1\nQ 1\n").unwrap();
        let r = kink.resolve(0, ResolveMode::Plus).unwrap();
        assert!(!r.split);
        assert_eq!(r.diagram.vertices()[0], Vertex::new(VertexKind::Positive, [1, 2, 2, 1]));

        let hopf = from_braid(2, &[1, 1], &BTreeSet::from([1, 2])).unwrap();
        let r = hopf.resolve(0, ResolveMode::Minus).unwrap();
        let kinds: Vec<_> = r.diagram.vertices().iter().map(|v| v.kind).collect();
        assert_eq!(kinds, [VertexKind::Negative, VertexKind::Singular]);

        let tref = parse_diagram(TREFOIL).unwrap();
        assert_eq!(tref.resolve(0, ResolveMode::Plus), Err(Error::NotSingular(0)));
    }

    #[test]
    fn resolve_oriented_splits_kink() {
        let kink = parse_diagram("S 1 2 2 1\nQ 1\n").unwrap();
        let r = kink.resolve(0, ResolveMode::Oriented).unwrap();
        assert!(r.split);
        assert_eq!(r.diagram.num_vertices(), 0);
        assert_eq!(r.diagram.components(), 2);
    }

    #[test]
    fn resolve_oriented_relabels_to_smallest() {
        // smoothing one trefoil crossing leaves a Hopf diagram
        let tref = parse_diagram(TREFOIL).unwrap();
        let r = tref.resolve(1, ResolveMode::Oriented).unwrap();
        assert!(!r.split);
        let d = &r.diagram;
        assert_eq!(d.num_vertices(), 2);
        assert_eq!(d.num_edges(), 4);
        // vertex 1 was X+ 4 3 5 6: 4 merges with 6, 3 merges with 5
        assert_eq!(d.edges(), &BTreeSet::from([1, 2, 3, 4]));
        assert_eq!(d.vertices()[1].slots, [4, 3, 2, 1]);
        assert!(d.is_connected());
        Diagram::new("", d.vertices().to_vec(), d.marked_edge()).unwrap();
    }

    #[test]
    fn plus_then_singularize_is_identity() {
        let all: BTreeSet<usize> = (1..=6).collect();
        let d = from_braid(3, &[1, 2, 1, 2, 1, 2], &all).unwrap();
        for v in 0..d.num_vertices() {
            let plus = d.resolve(v, ResolveMode::Plus).unwrap().diagram;
            assert_eq!(plus.singularize(v).unwrap(), d);
        }
    }

    #[test]
    fn singularize_all_matches_masked_braid() {
        let word = [1, 2, 1, 2, 1, 2];
        let mut d = from_braid(3, &word, &BTreeSet::new()).unwrap();
        for v in 0..d.num_vertices() {
            d = d.singularize(v).unwrap();
        }
        let masked = from_braid(3, &word, &(1..=6).collect()).unwrap();
        assert_eq!(d.canonical().vertices(), masked.canonical().vertices());
        assert_eq!(d.singularize(0), Err(Error::AlreadySingular(0)));
        let kink = parse_diagram("X+ 1 2 2 1\nQ 1\n").unwrap();
        assert_eq!(kink.singularize(0).unwrap().vertices()[0].kind, VertexKind::Singular);
    }

    #[test]
    fn planar_singular_flag() {
        assert!(Diagram::unknot().is_planar_singular());
        assert!(!parse_diagram(TREFOIL).unwrap().is_planar_singular());
    }

    #[test]
    fn skd_round_trip() {
        for src in [TREFOIL, "unknot\nQ 1\n", "diagram k\nS 1 2 2 1\nQ 2\n"] {
            let d = parse_diagram(src).unwrap();
            assert_eq!(parse_diagram(&d.to_skd()).unwrap(), d);
        }
    }

    #[test]
    fn json_shape() {
        let d = parse_diagram("diagram k\nS 1 2 2 1\nQ 1\n").unwrap();
        assert_eq!(
            d.to_json().to_string(),
            r#"{"edges":2,"name":"k","q":1,"vertices":[{"kind":"S","slots":[1,2,2,1]}]}"#
        );
    }
}
