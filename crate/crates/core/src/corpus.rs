//! Built-in diagrams with their known invariants.

use crate::diagram::{parse_diagram, Diagram};
use crate::error::Result;
use crate::laurent::HalfLaurent;

#[derive(Clone, Copy, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    /// `.skd` source, either vertex lines or a `braid` line.
    pub source: &'static str,
    pub delta: Option<&'static str>,
    pub chi_hfa: Option<&'static str>,
    pub states: Option<u64>,
}

impl CorpusEntry {
    pub fn diagram(&self) -> Result<Diagram> {
        Ok(parse_diagram(self.source)?.with_name(self.name))
    }

    pub fn expected_delta(&self) -> Option<HalfLaurent> {
        self.delta.map(|s| s.parse().expect("corpus polynomial"))
    }

    pub fn expected_chi_hfa(&self) -> Option<HalfLaurent> {
        self.chi_hfa.map(|s| s.parse().expect("corpus polynomial"))
    }
}

pub const CORPUS: &[CorpusEntry] = &[
    CorpusEntry {
        name: "unknot",
        source: "unknot\nQ 1\n",
        delta: Some("1"),
        chi_hfa: None,
        states: Some(1),
    },
    CorpusEntry {
        name: "kink+",
        source: "X+ 1 2 2 1\nQ 1\n",
        delta: Some("1"),
        chi_hfa: None,
        states: Some(1),
    },
    CorpusEntry {
        name: "sing-kink",
        source: "S 1 2 2 1\nQ 1\n",
        delta: Some("1"),
        chi_hfa: Some("1"),
        states: Some(1),
    },
    CorpusEntry {
        name: "trefoil",
        source: "X+ 1 2 3 4\nX+ 4 3 5 6\nX+ 6 5 2 1\nQ 1\n",
        delta: Some("T - 1 + T^-1"),
        chi_hfa: None,
        states: Some(3),
    },
    CorpusEntry {
        name: "trefoil-",
        source: "braid 2 -1,-1,-1\n",
        delta: Some("T - 1 + T^-1"),
        chi_hfa: None,
        states: Some(3),
    },
    CorpusEntry {
        name: "figure8",
        source: "braid 3 1,-2,1,-2\n",
        delta: Some("-T + 3 - T^-1"),
        chi_hfa: None,
        states: Some(5),
    },
    CorpusEntry {
        name: "hopf+",
        source: "braid 2 1,1\n",
        delta: Some("T^(1/2) - T^(-1/2)"),
        chi_hfa: None,
        states: Some(2),
    },
    CorpusEntry {
        name: "sing-hopf2",
        source: "braid 2 1,1 sing 1,2\n",
        delta: Some("-T^(1/2) - T^(-1/2)"),
        chi_hfa: Some("T^(3/2) - T^(-1/2)"),
        states: Some(2),
    },
    CorpusEntry {
        name: "sing-trefoil1",
        source: "braid 2 1,1,1 sing 1\n",
        delta: Some("T^-1"),
        chi_hfa: Some("T^-1"),
        states: None,
    },
    CorpusEntry {
        name: "trefoil-sing3",
        source: "braid 2 1,1,1 sing 1,2,3\n",
        delta: Some("T + 2 + T^-1"),
        chi_hfa: Some("T^3 - 2*T + T^-1"),
        states: Some(4),
    },
    CorpusEntry {
        name: "torus33sing",
        source: "braid 3 1,2,1,2,1,2 sing 1,2,3,4,5,6\n",
        delta: Some("T^2 + 5*T + 9 + 5*T^-1 + T^-2"),
        chi_hfa: Some("-T^7 + 6*T^5 - 21*T^3 + 21*T^2 - 6 + T^-2"),
        states: Some(21),
    },
];

pub fn lookup(name: &str) -> Option<&'static CorpusEntry> {
    CORPUS.iter().find(|e| e.name == name)
}
