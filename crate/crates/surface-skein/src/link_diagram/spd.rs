//! SPD (surface planar diagram) parsing and serialization.
//!
//! The document is UTF-8 JSON:
//! `{"name": str, "crossings": [{"id": int, "darts": [d0,d1,d2,d3],
//! "over_in": 1|3}, ...]}` with darts counterclockwise, each dart label
//! appearing exactly twice in the document, position 0 the incoming
//! under-strand end. Writers emit crossings sorted by id.

use serde::{Deserialize, Serialize};

use super::{Crossing, DiagramError, LinkDiagram};
use crate::surface_map::CombinatorialMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpdCrossing {
    pub id: u32,
    pub darts: [u32; 4],
    pub over_in: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpdDocument {
    pub name: String,
    pub crossings: Vec<SpdCrossing>,
}

impl SpdDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("SPD serialization")
    }
}

pub fn parse(text: &str) -> Result<LinkDiagram, DiagramError> {
    let doc: SpdDocument = serde_json::from_str(text)
        .map_err(|e| DiagramError::Syntax(format!("line {}, column {}: {}", e.line(), e.column(), e)))?;
    from_document(&doc)
}

pub fn from_document(doc: &SpdDocument) -> Result<LinkDiagram, DiagramError> {
    if doc.crossings.is_empty() {
        return Err(DiagramError::Syntax("no crossings".into()));
    }
    for (i, c) in doc.crossings.iter().enumerate() {
        if c.id != i as u32 {
            return Err(DiagramError::Syntax(format!(
                "crossing ids must be 0..n-1 in order; found id {} at index {}",
                c.id, i
            )));
        }
        if c.over_in != 1 && c.over_in != 3 {
            return Err(DiagramError::Syntax(format!(
                "crossing {}: over_in must be 1 or 3, found {}",
                c.id, c.over_in
            )));
        }
    }
    let records: Vec<[u32; 4]> = doc.crossings.iter().map(|c| c.darts).collect();
    let map = CombinatorialMap::build_from_records(records)?;
    let crossings: Vec<Crossing> = doc
        .crossings
        .iter()
        .map(|c| Crossing {
            darts: c.darts,
            over_in: c.over_in,
        })
        .collect();

    // Every edge must join one outgoing and one incoming strand end.
    for e in 0..map.edge_count() as u32 {
        let (a, b) = map.edge_slots(e);
        let ina = crossings[map.vertex_of_slot(a) as usize].is_incoming(map.pos_of_slot(a));
        let inb = crossings[map.vertex_of_slot(b) as usize].is_incoming(map.pos_of_slot(b));
        if ina == inb {
            return Err(DiagramError::OrientationInconsistent {
                label: map.edge_label(e),
                kind: if ina { "incoming" } else { "outgoing" },
            });
        }
    }

    // Link components: follow strands through crossings.
    let n_slots = map.vertex_count() * 4;
    let mut component_of_slot = vec![u32::MAX; n_slots];
    let mut n_components = 0;
    for start in 0..n_slots as u32 {
        if component_of_slot[start as usize] != u32::MAX {
            continue;
        }
        let id = n_components;
        n_components += 1;
        let mut s = start;
        loop {
            component_of_slot[s as usize] = id;
            // through the crossing, then along the edge
            let v = map.vertex_of_slot(s);
            let exit = map.slot(v, (map.pos_of_slot(s) + 2) & 3);
            component_of_slot[exit as usize] = id;
            s = map.alpha(exit);
            if s == start {
                break;
            }
        }
    }

    Ok(LinkDiagram {
        name: doc.name.clone(),
        map,
        crossings,
        component_of_slot,
        n_components,
    })
}

pub fn to_document(d: &LinkDiagram) -> SpdDocument {
    SpdDocument {
        name: d.name().to_string(),
        crossings: d
            .crossings()
            .iter()
            .enumerate()
            .map(|(id, c)| SpdCrossing {
                id: id as u32,
                darts: c.darts,
                over_in: c.over_in,
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn roundtrip_identity() {
        for text in [TREFOIL_S2, HOPF_S2, CURL_PLUS, FIG8_S2, TORUS4, TORUS8] {
            let d = LinkDiagram::parse_spd(text).unwrap();
            let doc = d.to_document();
            let d2 = LinkDiagram::from_document(&doc).unwrap();
            assert_eq!(doc, d2.to_document());
        }
    }

    #[test]
    fn syntax_error_reports_position() {
        let err = LinkDiagram::parse_spd("{\"name\": \"x\", \"crossings\": [nope]}").unwrap_err();
        match err {
            DiagramError::Syntax(msg) => assert!(msg.contains("line"), "{msg}"),
            other => panic!("{other:?}"),
        }
    }
}
