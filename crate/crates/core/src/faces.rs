//! Regions of the diagram complement, traced from the rotation system.

use std::collections::BTreeMap;

use crate::diagram::{Diagram, EdgeEnd, EdgeEnds, EdgeLabel, Slot, VertexId};
use crate::error::{Error, Result};

/// The four corners at a vertex. `D` sits between the two incoming ends,
/// `C` between `inR` and `outR`, `B` between the outgoing ends and `A`
/// between `outL` and `inL`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuadrantPos {
    D = 0,
    C = 1,
    B = 2,
    A = 3,
}

impl QuadrantPos {
    pub const ALL: [QuadrantPos; 4] = [QuadrantPos::D, QuadrantPos::C, QuadrantPos::B, QuadrantPos::A];

    /// Corner counterclockwise after `slot`.
    pub fn after(slot: Slot) -> QuadrantPos {
        QuadrantPos::ALL[slot.index()]
    }

    /// Corner clockwise before `slot`.
    pub fn before(slot: Slot) -> QuadrantPos {
        QuadrantPos::ALL[(slot.index() + 3) % 4]
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn letter(self) -> char {
        match self {
            QuadrantPos::A => 'A',
            QuadrantPos::B => 'B',
            QuadrantPos::C => 'C',
            QuadrantPos::D => 'D',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quadrant {
    pub vertex: VertexId,
    pub position: QuadrantPos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub id: usize,
    /// Corners in the order the boundary walk meets them.
    pub corners: Vec<Quadrant>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    pub faces: Vec<Face>,
    /// The two regions on either side of the marked edge.
    pub region_x: usize,
    pub region_y: usize,
    quadrant_face: Vec<[usize; 4]>,
}

impl FaceSet {
    pub fn face_of(&self, q: Quadrant) -> usize {
        self.quadrant_face[q.vertex][q.position.index()]
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Whether `face` may be occupied by a state.
    pub fn is_eligible(&self, face: usize) -> bool {
        face != self.region_x && face != self.region_y
    }

    pub fn eligible_faces(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.faces.len()).filter(|&f| self.is_eligible(f))
    }
}

/// Boundary walks of all faces, numbered in discovery order (vertex id,
/// then corner `D, C, B, A`). The walk leaves a corner along the slot
/// counterclockwise from it and enters the next corner counterclockwise
/// from the arrival slot.
pub(crate) fn trace_faces(d: &Diagram) -> Vec<Face> {
    let ends = d.edge_ends();
    let mut seen = vec![[false; 4]; d.num_vertices()];
    let mut faces = Vec::new();
    for v in 0..d.num_vertices() {
        for pos in QuadrantPos::ALL {
            if seen[v][pos.index()] {
                continue;
            }
            let mut corners = Vec::new();
            let mut cur = Quadrant { vertex: v, position: pos };
            while !seen[cur.vertex][cur.position.index()] {
                seen[cur.vertex][cur.position.index()] = true;
                corners.push(cur);
                let exit = Slot::from_index(cur.position.index() + 1);
                let arrival = opposite_end(d, &ends, EdgeEnd { vertex: cur.vertex, slot: exit });
                cur = Quadrant {
                    vertex: arrival.vertex,
                    position: QuadrantPos::after(arrival.slot),
                };
            }
            faces.push(Face {
                id: faces.len(),
                corners,
            });
        }
    }
    faces
}

fn opposite_end(d: &Diagram, ends: &BTreeMap<EdgeLabel, EdgeEnds>, end: EdgeEnd) -> EdgeEnd {
    let e = d.vertices()[end.vertex].edge(end.slot);
    let ee = &ends[&e];
    if end.slot.is_incoming() {
        ee.tail
    } else {
        ee.head
    }
}

/// Regions of a connected diagram, with the two regions beside the marked
/// edge identified.
pub fn compute_faces(d: &Diagram) -> Result<FaceSet> {
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    if d.num_vertices() == 0 {
        // a round circle: inside and outside
        return Ok(FaceSet {
            faces: vec![
                Face { id: 0, corners: Vec::new() },
                Face { id: 1, corners: Vec::new() },
            ],
            region_x: 0,
            region_y: 1,
            quadrant_face: Vec::new(),
        });
    }
    let faces = trace_faces(d);
    let euler = d.num_vertices() as i64 - d.num_edges() as i64 + faces.len() as i64;
    if euler != 2 {
        return Err(Error::NonPlanar { euler });
    }
    let mut quadrant_face = vec![[usize::MAX; 4]; d.num_vertices()];
    for f in &faces {
        for q in &f.corners {
            quadrant_face[q.vertex][q.position.index()] = f.id;
        }
    }

    let tail = d.edge_ends()[&d.marked_edge()].tail;
    let x = quadrant_face[tail.vertex][QuadrantPos::before(tail.slot).index()];
    let y = quadrant_face[tail.vertex][QuadrantPos::after(tail.slot).index()];
    if x == y {
        return Err(Error::DegenerateMarking);
    }
    Ok(FaceSet {
        faces,
        region_x: x,
        region_y: y,
        quadrant_face,
    })
}
