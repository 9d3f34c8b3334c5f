//! Diagram hypothesis checkers: alternating, checkerboard coloring,
//! primeness, edge representativity, reducedness.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{DiagramError, LinkDiagram, Side};
use crate::surface_map::transverse::{self, TransverseCurve};
use crate::surface_map::MapError;

pub type RegionColor = Side;

/// A face to A/B assignment with the region counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckerboardColoring {
    pub face_colors: Vec<RegionColor>,
    pub a_regions: usize,
    pub b_regions: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EdgeRepClass {
    /// Some essential simple closed curve meets the diagram in at most two
    /// points.
    Two,
    /// No essential curve meets it in fewer than four points (this encodes
    /// "four or more, or no essential curves at all").
    AtLeastFour,
}

pub fn is_alternating(d: &LinkDiagram) -> bool {
    let map = d.map();
    (0..map.edge_count() as u32).all(|e| {
        let (a, b) = map.edge_slots(e);
        // positions 0,2 are under passages, 1,3 over passages
        (map.pos_of_slot(a) % 2) != (map.pos_of_slot(b) % 2)
    })
}

/// Corner letter of the corner between positions `i` and `i+1`: the two
/// corners merged by the A-smoothing, (1,2) and (3,0), are labeled A.
fn corner_letter(i: u8) -> Side {
    if i % 2 == 1 {
        Side::A
    } else {
        Side::B
    }
}

pub fn checkerboard_coloring(
    d: &LinkDiagram,
) -> Result<Option<CheckerboardColoring>, DiagramError> {
    if !is_alternating(d) {
        return Err(DiagramError::NotAlternating);
    }
    let map = d.map();
    let mut colors: Vec<Option<Side>> = vec![None; map.face_count()];
    for v in 0..map.vertex_count() as u32 {
        for i in 0..4u8 {
            let f = map.face_of_corner(v, i) as usize;
            let letter = corner_letter(i);
            match colors[f] {
                None => colors[f] = Some(letter),
                Some(c) if c == letter => {}
                Some(_) => return Ok(None),
            }
        }
    }
    let face_colors: Vec<Side> = colors
        .into_iter()
        .map(|c| c.expect("cellular map: every face has a corner"))
        .collect();
    let a_regions = face_colors.iter().filter(|&&c| c == Side::A).count();
    let b_regions = face_colors.len() - a_regions;
    Ok(Some(CheckerboardColoring {
        face_colors,
        a_regions,
        b_regions,
    }))
}

/// All candidate curves meeting the diagram in exactly one or two points,
/// paired with their cut when they are simple.
fn small_curve_cuts(d: &LinkDiagram) -> Vec<(TransverseCurve, crate::surface_map::CutResult)> {
    let map = d.map();
    let mut out = Vec::new();
    for curve in transverse::one_point_curves(map)
        .into_iter()
        .chain(transverse::two_point_curves(map))
    {
        match transverse::cut_along(map, &curve) {
            Ok(cut) => out.push((curve, cut)),
            Err(MapError::NonSimpleCycle) => {}
            Err(e) => unreachable!("small curve cut failed: {e}"),
        }
    }
    out
}

pub fn is_prime(d: &LinkDiagram) -> bool {
    let genus0 = d.genus() == 0;
    for (curve, cut) in small_curve_cuts(d) {
        if curve.crossing_count() != 2 || !cut.has_disk_side() {
            continue;
        }
        if cut.sides.0 == cut.sides.1 {
            continue;
        }
        let l = &cut.components[cut.sides.0];
        let r = &cut.components[cut.sides.1];
        let ok = if genus0 {
            // some side must be a crossing-free single arc
            l.interior_vertices.is_empty() || r.interior_vertices.is_empty()
        } else {
            // the disk side must be the crossing-free one
            let disk = if l.is_disk() { l } else { r };
            disk.interior_vertices.is_empty()
        };
        if !ok {
            return false;
        }
    }
    true
}

pub fn edge_representativity_class(d: &LinkDiagram) -> EdgeRepClass {
    for (_, cut) in small_curve_cuts(d) {
        if !cut.has_disk_side() {
            return EdgeRepClass::Two;
        }
    }
    EdgeRepClass::AtLeastFour
}

pub fn is_reduced(d: &LinkDiagram) -> Result<bool, DiagramError> {
    if !is_alternating(d) {
        return Err(DiagramError::HypothesesNotMet(
            "reducedness check requires an alternating diagram".into(),
        ));
    }
    if checkerboard_coloring(d)?.is_none() {
        return Err(DiagramError::HypothesesNotMet(
            "reducedness check requires a checkerboard colorable diagram".into(),
        ));
    }
    // Every component traverses a crossing automatically in this encoding.
    Ok(is_prime(d) && edge_representativity_class(d) == EdgeRepClass::AtLeastFour)
}

/// Region counts keyed by color, used in a few identities.
pub fn region_count_by_color(d: &LinkDiagram) -> Result<BTreeMap<Side, usize>, DiagramError> {
    let coloring = checkerboard_coloring(d)?.ok_or_else(|| {
        DiagramError::HypothesesNotMet("diagram is not checkerboard colorable".into())
    })?;
    let mut m = BTreeMap::new();
    m.insert(Side::A, coloring.a_regions);
    m.insert(Side::B, coloring.b_regions);
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn trefoil_colorable_with_five_regions() {
        let d = diagram(TREFOIL_S2);
        let c = d.checkerboard_coloring().unwrap().unwrap();
        assert_eq!(c.a_regions + c.b_regions, 5);
    }

    #[test]
    fn coloring_swaps_under_mirror() {
        let d = diagram(TREFOIL_S2);
        let c = d.checkerboard_coloring().unwrap().unwrap();
        let m = d.mirror().checkerboard_coloring().unwrap().unwrap();
        assert_eq!(c.a_regions, m.b_regions);
        assert_eq!(c.b_regions, m.a_regions);
    }

    #[test]
    fn trefoil_is_prime_and_big_representativity() {
        let d = diagram(TREFOIL_S2);
        assert!(d.is_prime());
        assert_eq!(d.edge_representativity_class(), EdgeRepClass::AtLeastFour);
        assert_eq!(d.is_reduced().unwrap(), true);
    }

    #[test]
    fn composite_sum_is_not_prime() {
        let d = diagram(COMPOSITE6_S2);
        assert_eq!(d.genus(), 0);
        assert!(d.is_alternating());
        assert!(!d.is_prime());
        assert_eq!(d.is_reduced().unwrap(), false);
    }

    #[test]
    fn not_alternating_reports_hypotheses() {
        // Trefoil with one crossing switched is not alternating.
        let text = TREFOIL_S2.replace(
            "{\"id\": 0, \"darts\": [5, 1, 0, 4], \"over_in\": 3}",
            "{\"id\": 0, \"darts\": [4, 5, 1, 0], \"over_in\": 1}",
        );
        let d = diagram(&text);
        assert!(!d.is_alternating());
        assert!(d.is_reduced().is_err());
    }
}
