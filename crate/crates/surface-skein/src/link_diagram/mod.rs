//! Link diagrams on closed orientable surfaces.
//!
//! A diagram is a combinatorial map whose vertices are crossings. The SPD
//! record of a crossing lists its four darts counterclockwise with position
//! 0 the incoming under-strand dart and position 2 the outgoing one; the
//! over-strand runs along positions 1 and 3 and `over_in` names its incoming
//! dart. With those conventions the A-smoothing of every crossing joins the
//! strand ends at positions (0,1) and (2,3), a crossing is positive exactly
//! when `over_in == 3`, and the corner between positions `i` and `i+1` gets
//! the checkerboard letter A when `i` is odd.

mod checks;
mod spd;
mod twist;

pub use checks::{CheckerboardColoring, EdgeRepClass, RegionColor};
pub use spd::{SpdCrossing, SpdDocument};
pub use twist::{TwistDecomposition, TwistRegion};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::surface_map::{CombinatorialMap, MapError};

#[derive(Debug, Error)]
pub enum DiagramError {
    #[error("SPD syntax error: {0}")]
    Syntax(String),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error("edge {label} joins two {kind} strand ends")]
    OrientationInconsistent { label: u32, kind: &'static str },
    #[error("operation requires an alternating diagram")]
    NotAlternating,
    #[error("hypotheses not met: {0}")]
    HypothesesNotMet(String),
}

/// Which resolution, and which side of the various A/B-indexed notions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::A => "A",
            Side::B => "B",
        })
    }
}

/// A crossing: four darts counterclockwise, position 0 the incoming
/// under-strand end, with the incoming over-strand end at `over_in`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub darts: [u32; 4],
    pub over_in: u8,
}

impl Crossing {
    pub fn sign(&self) -> i64 {
        if self.over_in == 3 {
            1
        } else {
            -1
        }
    }

    /// Position the strand leaves from when entering at `pos`.
    pub fn strand_exit(&self, pos: u8) -> u8 {
        (pos + 2) & 3
    }

    /// Whether the strand end at `pos` is an incoming one.
    pub fn is_incoming(&self, pos: u8) -> bool {
        pos == 0 || pos == self.over_in
    }
}

/// A validated oriented link diagram on a closed orientable surface.
#[derive(Debug, Clone)]
pub struct LinkDiagram {
    name: String,
    map: CombinatorialMap,
    crossings: Vec<Crossing>,
    /// Per slot, the link component of the strand passing through it.
    component_of_slot: Vec<u32>,
    n_components: u32,
}

impl LinkDiagram {
    /// Parses and validates an SPD document.
    pub fn parse_spd(text: &str) -> Result<Self, DiagramError> {
        spd::parse(text)
    }

    pub fn from_document(doc: &SpdDocument) -> Result<Self, DiagramError> {
        spd::from_document(doc)
    }

    pub fn to_document(&self) -> SpdDocument {
        spd::to_document(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn map(&self) -> &CombinatorialMap {
        &self.map
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn genus(&self) -> u32 {
        self.map.genus()
    }

    pub fn component_count(&self) -> u32 {
        self.n_components
    }

    pub fn component_of_slot(&self, slot: u32) -> u32 {
        self.component_of_slot[slot as usize]
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign()).sum()
    }

    /// The diagram with every crossing switched.
    pub fn mirror(&self) -> LinkDiagram {
        let crossings: Vec<SpdCrossing> = self
            .crossings
            .iter()
            .enumerate()
            .map(|(id, c)| {
                let d = &c.darts;
                let (darts, over_in) = if c.over_in == 3 {
                    ([d[3], d[0], d[1], d[2]], 1)
                } else {
                    ([d[1], d[2], d[3], d[0]], 3)
                };
                SpdCrossing {
                    id: id as u32,
                    darts,
                    over_in,
                }
            })
            .collect();
        let doc = SpdDocument {
            name: format!("{}.mirror", self.name),
            crossings,
        };
        spd::from_document(&doc).expect("mirror of a valid diagram is valid")
    }

    /// True iff along every edge one end is an over passage and the other an
    /// under passage.
    pub fn is_alternating(&self) -> bool {
        checks::is_alternating(self)
    }

    /// The unique checkerboard coloring when every region has all its corner
    /// letters equal; `None` when some region mixes letters.
    pub fn checkerboard_coloring(&self) -> Result<Option<CheckerboardColoring>, DiagramError> {
        checks::checkerboard_coloring(self)
    }

    /// Primeness in the sense of 2-point curves: every simple closed curve
    /// meeting the diagram twice bounds, on the appropriate side, a single
    /// crossing-free arc.
    pub fn is_prime(&self) -> bool {
        checks::is_prime(self)
    }

    /// Coarse edge representativity: `Two` when some essential curve meets
    /// the diagram in at most two points, `AtLeastFour` otherwise (with all
    /// regions disks, zero intersections cannot happen).
    pub fn edge_representativity_class(&self) -> EdgeRepClass {
        checks::edge_representativity_class(self)
    }

    /// Reducedness via the characterization: prime, every component crosses
    /// (automatic in this encoding), and edge representativity above two.
    /// Requires an alternating checkerboard-colorable diagram.
    pub fn is_reduced(&self) -> Result<bool, DiagramError> {
        checks::is_reduced(self)
    }

    /// Maximal bigon chains plus single crossings.
    pub fn twist_regions(&self) -> TwistDecomposition {
        twist::twist_regions(self)
    }

    /// Twist-reducedness: every simple curve meeting the diagram four times
    /// in two crossing quadrants has, on one side, exactly a bigon chain
    /// extending those two crossings inside one twist region.
    pub fn is_twist_reduced(&self) -> Result<bool, DiagramError> {
        twist::is_twist_reduced(self)
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    pub const TREFOIL_S2: &str = include_str!("../../fixtures/trefoil_s2.spd");
    pub const HOPF_S2: &str = include_str!("../../fixtures/hopf_s2.spd");
    pub const CURL_PLUS: &str = include_str!("../../fixtures/curl_plus_s2.spd");
    pub const FIG8_S2: &str = include_str!("../../fixtures/fig8_s2.spd");
    pub const COMPOSITE6_S2: &str = include_str!("../../fixtures/composite6_s2.spd");
    pub const NONTWIST4_S2: &str = include_str!("../../fixtures/nontwist4_s2.spd");
    pub const TORUS4: &str = include_str!("../../fixtures/torus4.spd");
    pub const TORUS8: &str = include_str!("../../fixtures/torus8.spd");

    pub fn diagram(text: &str) -> super::LinkDiagram {
        super::LinkDiagram::parse_spd(text).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn trefoil_basics() {
        let d = diagram(TREFOIL_S2);
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.genus(), 0);
        assert_eq!(d.writhe(), 3);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.map().face_count(), 5);
        assert!(d.is_alternating());
    }

    #[test]
    fn mirror_negates_writhe() {
        for text in [TREFOIL_S2, HOPF_S2, CURL_PLUS, FIG8_S2] {
            let d = diagram(text);
            assert_eq!(d.mirror().writhe(), -d.writhe());
        }
    }

    #[test]
    fn mirror_involution_on_flags() {
        for text in [TREFOIL_S2, HOPF_S2, FIG8_S2, TORUS4, TORUS8] {
            let d = diagram(text);
            let m = d.mirror();
            assert_eq!(d.is_alternating(), m.is_alternating(), "{text}");
            assert_eq!(d.is_prime(), m.is_prime());
        }
    }

    #[test]
    fn hopf_basics() {
        let d = diagram(HOPF_S2);
        assert_eq!(d.writhe(), 2);
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.genus(), 0);
    }

    #[test]
    fn fig8_writhe_zero() {
        let d = diagram(FIG8_S2);
        assert_eq!(d.writhe(), 0);
        assert_eq!(d.genus(), 0);
        assert!(d.is_alternating());
    }

    #[test]
    fn orientation_inconsistent_rejected() {
        // Edge 0 joining two incoming under-ends (position 0 of both).
        let text = r#"{"name":"bad","crossings":[
            {"id":0,"darts":[0,1,2,3],"over_in":3},
            {"id":1,"darts":[0,1,2,3],"over_in":3}]}"#;
        match LinkDiagram::parse_spd(text) {
            Err(DiagramError::OrientationInconsistent { .. }) => {}
            other => panic!("expected OrientationInconsistent, got {other:?}"),
        }
    }
}
