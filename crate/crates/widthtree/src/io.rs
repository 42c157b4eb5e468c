//! Serialization of width trees and blueprints, and DOT export.
//!
//! Documents are JSON. Parsing reports malformed text as `SyntaxError` and
//! wraps every structural failure as `SemanticError` around the underlying
//! domain error. All quantities are exact integers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tangle::{
    ArcKind, CTrivialTangleData, DecompositionBlueprint, SlotRef, TangleArc, TangleEntry,
    TangleSide, TangleSphere,
};
use crate::tree::{validate, Ditree, LabelFunction, WidthTree};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct VertexDoc {
    pub id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<i64>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub boundary: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct EdgeDoc {
    pub tail: String,
    pub head: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<i64>,
}

/// Textual form of a width tree (or, when labels are omitted, a bare
/// ditree).
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct WidthTreeDocument {
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<EdgeDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<u64>,
}

impl WidthTreeDocument {
    pub fn from_width_tree(wt: &WidthTree) -> WidthTreeDocument {
        let tree = wt.tree();
        let mut vertices: Vec<VertexDoc> = (0..tree.vertex_count())
            .map(|v| VertexDoc {
                id: tree.id(v).to_string(),
                label: Some(wt.vertex_label(v)),
                boundary: tree.is_boundary(v),
            })
            .collect();
        vertices.sort_by(|a, b| a.id.cmp(&b.id));
        let mut edges: Vec<EdgeDoc> = (0..tree.edge_count())
            .map(|e| {
                let (t, h) = tree.edge_ids(e);
                EdgeDoc {
                    tail: t.to_string(),
                    head: h.to_string(),
                    label: Some(wt.edge_label(e)),
                }
            })
            .collect();
        edges.sort_by(|a, b| (&a.tail, &a.head).cmp(&(&b.tail, &b.head)));
        WidthTreeDocument {
            vertices,
            edges,
            delta: wt.delta(),
        }
    }

    pub fn from_ditree(tree: &Ditree) -> WidthTreeDocument {
        let mut vertices: Vec<VertexDoc> = (0..tree.vertex_count())
            .map(|v| VertexDoc {
                id: tree.id(v).to_string(),
                label: None,
                boundary: tree.is_boundary(v),
            })
            .collect();
        vertices.sort_by(|a, b| a.id.cmp(&b.id));
        let mut edges: Vec<EdgeDoc> = (0..tree.edge_count())
            .map(|e| {
                let (t, h) = tree.edge_ids(e);
                EdgeDoc {
                    tail: t.to_string(),
                    head: h.to_string(),
                    label: None,
                }
            })
            .collect();
        edges.sort_by(|a, b| (&a.tail, &a.head).cmp(&(&b.tail, &b.head)));
        WidthTreeDocument {
            vertices,
            edges,
            delta: None,
        }
    }

    pub fn to_ditree(&self) -> Result<Ditree> {
        Ditree::from_parts(
            self.vertices.iter().map(|v| v.id.clone()).collect(),
            self.edges
                .iter()
                .map(|e| (e.tail.clone(), e.head.clone()))
                .collect(),
            self.vertices
                .iter()
                .filter(|v| v.boundary)
                .map(|v| v.id.clone())
                .collect(),
        )
        .map_err(|e| Error::SemanticError(Box::new(e)))
    }

    pub fn to_width_tree(&self) -> Result<WidthTree> {
        let tree = self.to_ditree()?;
        let semantic = |e: Error| Error::SemanticError(Box::new(e));
        let mut vlabels = Vec::with_capacity(self.vertices.len());
        for v in 0..tree.vertex_count() {
            let doc = self
                .vertices
                .iter()
                .find(|d| d.id == tree.id(v))
                .expect("vertex came from this document");
            vlabels.push(
                doc.label
                    .ok_or_else(|| semantic(Error::MissingLabel(format!("vertex {}", doc.id))))?,
            );
        }
        let mut elabels = Vec::with_capacity(self.edges.len());
        for e in 0..tree.edge_count() {
            let (t, h) = tree.edge_ids(e);
            let doc = self
                .edges
                .iter()
                .find(|d| d.tail == t && d.head == h)
                .expect("edge came from this document");
            elabels.push(doc.label.ok_or_else(|| {
                semantic(Error::MissingLabel(format!("edge {t} -> {h}")))
            })?);
        }
        let lambda = LabelFunction::from_vecs(&tree, vlabels, elabels).map_err(semantic)?;
        Ok(validate(tree, lambda).map_err(semantic)?.with_delta(self.delta))
    }
}

pub fn serialize_width_tree(wt: &WidthTree) -> String {
    let doc = WidthTreeDocument::from_width_tree(wt);
    let mut s = serde_json::to_string_pretty(&doc).expect("documents are serializable");
    s.push('\n');
    s
}

pub fn parse_width_tree_document(text: &str) -> Result<WidthTreeDocument> {
    serde_json::from_str(text).map_err(|e| Error::SyntaxError(e.to_string()))
}

pub fn parse_width_tree(text: &str) -> Result<WidthTree> {
    parse_width_tree_document(text)?.to_width_tree()
}

pub fn parse_ditree(text: &str) -> Result<Ditree> {
    parse_width_tree_document(text)?.to_ditree()
}

// ---------------------------------------------------------------------------
// Blueprint documents
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ArcEndDoc {
    /// "pos" for the positive boundary, "negK" for the K-th negative one.
    pub sphere: String,
    pub slot: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ArcDoc {
    pub kind: String,
    pub ends: [ArcEndDoc; 2],
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct NegBoundaryDoc {
    pub tail: String,
    pub head: String,
    pub vertical_arcs: usize,
    pub punctures: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TangleDoc {
    pub vertex: String,
    pub side: String,
    pub bridge_arcs: usize,
    pub positive_punctures: usize,
    pub boundaries: Vec<NegBoundaryDoc>,
    pub ghost_edges: Vec<(usize, usize)>,
    pub arcs: Vec<ArcDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ThickGluingDoc {
    pub vertex: String,
    pub map: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ThinGluingDoc {
    pub tail: String,
    pub head: String,
    pub map: Vec<usize>,
}

/// Textual form of a decomposition blueprint; everything needed to re-check
/// the blueprint invariants is present.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct BlueprintDocument {
    pub width_tree: WidthTreeDocument,
    pub tangles: Vec<TangleDoc>,
    pub thick_gluings: Vec<ThickGluingDoc>,
    pub thin_gluings: Vec<ThinGluingDoc>,
    pub unglued: Vec<EdgeDoc>,
}

fn sphere_to_string(s: TangleSphere) -> String {
    match s {
        TangleSphere::Positive => "pos".into(),
        TangleSphere::Negative(i) => format!("neg{i}"),
    }
}

fn sphere_from_string(s: &str) -> Result<TangleSphere> {
    if s == "pos" {
        return Ok(TangleSphere::Positive);
    }
    if let Some(rest) = s.strip_prefix("neg") {
        if let Ok(i) = rest.parse::<usize>() {
            return Ok(TangleSphere::Negative(i));
        }
    }
    Err(Error::SyntaxError(format!("bad sphere reference {s}")))
}

fn kind_to_string(k: ArcKind) -> String {
    match k {
        ArcKind::Bridge => "bridge".into(),
        ArcKind::Vertical => "vertical".into(),
        ArcKind::Ghost => "ghost".into(),
    }
}

fn kind_from_string(s: &str) -> Result<ArcKind> {
    match s {
        "bridge" => Ok(ArcKind::Bridge),
        "vertical" => Ok(ArcKind::Vertical),
        "ghost" => Ok(ArcKind::Ghost),
        other => Err(Error::SyntaxError(format!("bad arc kind {other}"))),
    }
}

impl BlueprintDocument {
    pub fn from_blueprint(bp: &DecompositionBlueprint) -> BlueprintDocument {
        let tree = bp.width_tree().tree();
        let tangles = bp
            .tangles()
            .iter()
            .map(|entry| {
                let boundaries = entry
                    .boundary_edges
                    .iter()
                    .enumerate()
                    .map(|(i, &e)| {
                        let (t, h) = tree.edge_ids(e);
                        NegBoundaryDoc {
                            tail: t.to_string(),
                            head: h.to_string(),
                            vertical_arcs: entry.data.vertical_counts()[i],
                            punctures: entry.data.negative_punctures(i),
                        }
                    })
                    .collect();
                TangleDoc {
                    vertex: tree.id(entry.vertex).to_string(),
                    side: match entry.side {
                        TangleSide::In => "in".into(),
                        TangleSide::Out => "out".into(),
                    },
                    bridge_arcs: entry.data.bridge_arcs(),
                    positive_punctures: entry.data.positive_punctures(),
                    boundaries,
                    ghost_edges: entry.data.ghost_edges().to_vec(),
                    arcs: entry
                        .data
                        .arcs()
                        .iter()
                        .map(|a| ArcDoc {
                            kind: kind_to_string(a.kind),
                            ends: [
                                ArcEndDoc {
                                    sphere: sphere_to_string(a.ends[0].sphere),
                                    slot: a.ends[0].slot,
                                },
                                ArcEndDoc {
                                    sphere: sphere_to_string(a.ends[1].sphere),
                                    slot: a.ends[1].slot,
                                },
                            ],
                        })
                        .collect(),
                }
            })
            .collect();
        let thick_gluings = bp
            .thick_gluings()
            .iter()
            .map(|(v, map)| ThickGluingDoc {
                vertex: tree.id(*v).to_string(),
                map: map.clone(),
            })
            .collect();
        let thin_gluings = bp
            .thin_gluings()
            .iter()
            .map(|(e, map)| {
                let (t, h) = tree.edge_ids(*e);
                ThinGluingDoc {
                    tail: t.to_string(),
                    head: h.to_string(),
                    map: map.clone(),
                }
            })
            .collect();
        let unglued = bp
            .unglued_edges()
            .iter()
            .map(|&e| {
                let (t, h) = tree.edge_ids(e);
                EdgeDoc {
                    tail: t.to_string(),
                    head: h.to_string(),
                    label: None,
                }
            })
            .collect();
        BlueprintDocument {
            width_tree: WidthTreeDocument::from_width_tree(bp.width_tree()),
            tangles,
            thick_gluings,
            thin_gluings,
            unglued,
        }
    }

    pub fn to_blueprint(&self) -> Result<DecompositionBlueprint> {
        let semantic = |e: Error| Error::SemanticError(Box::new(e));
        let wt = self.width_tree.to_width_tree()?;
        let tree = wt.tree().clone();
        let mut tangles = Vec::new();
        for doc in &self.tangles {
            let vertex = tree.vertex_index(&doc.vertex).map_err(semantic)?;
            let side = match doc.side.as_str() {
                "in" => TangleSide::In,
                "out" => TangleSide::Out,
                other => {
                    return Err(Error::SyntaxError(format!("bad tangle side {other}")));
                }
            };
            let mut boundary_edges = Vec::new();
            let mut vertical_counts = Vec::new();
            for b in &doc.boundaries {
                boundary_edges.push(tree.edge_index(&b.tail, &b.head).map_err(semantic)?);
                vertical_counts.push(b.vertical_arcs);
            }
            let mut arcs = Vec::new();
            for a in &doc.arcs {
                arcs.push(TangleArc {
                    kind: kind_from_string(&a.kind)?,
                    ends: [
                        SlotRef {
                            sphere: sphere_from_string(&a.ends[0].sphere)?,
                            slot: a.ends[0].slot,
                        },
                        SlotRef {
                            sphere: sphere_from_string(&a.ends[1].sphere)?,
                            slot: a.ends[1].slot,
                        },
                    ],
                });
            }
            let data = CTrivialTangleData::from_table(
                doc.bridge_arcs,
                vertical_counts,
                doc.ghost_edges.clone(),
                arcs,
            )
            .map_err(semantic)?;
            if data.positive_punctures() != doc.positive_punctures {
                return Err(semantic(Error::InfeasiblePod(
                    "declared positive puncture count disagrees with the arcs".into(),
                )));
            }
            for (i, b) in doc.boundaries.iter().enumerate() {
                if data.negative_punctures(i) != b.punctures {
                    return Err(semantic(Error::InfeasiblePod(
                        "declared negative puncture count disagrees with the arcs".into(),
                    )));
                }
            }
            tangles.push(TangleEntry {
                vertex,
                side,
                data,
                boundary_edges,
            });
        }
        let mut thick_gluings = Vec::new();
        for g in &self.thick_gluings {
            let v = tree.vertex_index(&g.vertex).map_err(semantic)?;
            check_permutation(&g.map)?;
            thick_gluings.push((v, g.map.clone()));
        }
        let mut thin_gluings = Vec::new();
        for g in &self.thin_gluings {
            let e = tree.edge_index(&g.tail, &g.head).map_err(semantic)?;
            check_permutation(&g.map)?;
            thin_gluings.push((e, g.map.clone()));
        }
        let mut unglued = Vec::new();
        for g in &self.unglued {
            unglued.push(tree.edge_index(&g.tail, &g.head).map_err(semantic)?);
        }
        let bp = DecompositionBlueprint::from_parts(wt, tangles, thick_gluings, thin_gluings, unglued);
        // Cross-check the derived tree against the carried one.
        let derived = bp.derive_width_tree().map_err(semantic)?;
        if !derived.is_equivalent_to(bp.width_tree()) {
            return Err(semantic(Error::InternalError(
                "blueprint does not realize its width tree".into(),
            )));
        }
        Ok(bp)
    }
}

fn check_permutation(map: &[usize]) -> Result<()> {
    let mut seen = vec![false; map.len()];
    for &x in map {
        if x >= map.len() || seen[x] {
            return Err(Error::SemanticError(Box::new(Error::InvalidCut(format!(
                "gluing map is not a permutation of 0..{}",
                map.len()
            )))));
        }
        seen[x] = true;
    }
    Ok(())
}

pub fn serialize_blueprint(bp: &DecompositionBlueprint) -> String {
    let doc = BlueprintDocument::from_blueprint(bp);
    let mut s = serde_json::to_string_pretty(&doc).expect("documents are serializable");
    s.push('\n');
    s
}

pub fn parse_blueprint(text: &str) -> Result<DecompositionBlueprint> {
    let doc: BlueprintDocument =
        serde_json::from_str(text).map_err(|e| Error::SyntaxError(e.to_string()))?;
    doc.to_blueprint()
}

// ---------------------------------------------------------------------------
// DOT export
// ---------------------------------------------------------------------------

/// Graphviz text for a width tree: nodes carry `id: label`, boundary
/// vertices are boxes, edges keep their direction and label.
pub fn export_dot(wt: &WidthTree) -> String {
    let tree = wt.tree();
    let mut out = String::from("digraph widthtree {\n");
    let mut order: Vec<usize> = (0..tree.vertex_count()).collect();
    order.sort_by(|&a, &b| tree.id(a).cmp(tree.id(b)));
    for v in order {
        let shape = if tree.is_boundary(v) { ", shape=box" } else { "" };
        out.push_str(&format!(
            "  \"{}\" [label=\"{}: {}\"{}];\n",
            tree.id(v),
            tree.id(v),
            wt.vertex_label(v),
            shape
        ));
    }
    let mut edges: Vec<usize> = (0..tree.edge_count()).collect();
    edges.sort_by(|&a, &b| tree.edge_ids(a).cmp(&tree.edge_ids(b)));
    for e in edges {
        let (t, h) = tree.edge_ids(e);
        out.push_str(&format!(
            "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
            t,
            h,
            wt.edge_label(e)
        ));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tangle::{assemble, knotify};

    #[test]
    fn width_tree_round_trip() {
        let wt = WidthTree::from_data(
            &[("a", 2), ("b", 3), ("c", 1)],
            &[("a", "b", 1), ("b", "c", 1)],
            &["c"],
        )
        .unwrap()
        .with_delta(Some(2));
        let text = serialize_width_tree(&wt);
        let back = parse_width_tree(&text).unwrap();
        assert!(back.is_equivalent_to(&wt));
        assert_eq!(back.delta(), Some(2));
    }

    #[test]
    fn duplicate_edge_is_semantic() {
        let text = r#"{
            "vertices": [{"id": "a", "label": 1}, {"id": "b", "label": 1}],
            "edges": [
                {"tail": "a", "head": "b", "label": 1},
                {"tail": "b", "head": "a", "label": 1}
            ]
        }"#;
        assert!(matches!(
            parse_width_tree(text),
            Err(Error::SemanticError(_))
        ));
    }

    #[test]
    fn bad_json_is_syntactic() {
        assert!(matches!(
            parse_width_tree("{\"vertices\": ["),
            Err(Error::SyntaxError(_))
        ));
    }

    #[test]
    fn missing_label_is_semantic() {
        let text = r#"{"vertices": [{"id": "a"}], "edges": []}"#;
        assert!(matches!(
            parse_width_tree(text),
            Err(Error::SemanticError(_))
        ));
        // The same document parses as a bare ditree.
        assert!(parse_ditree(text).is_ok());
    }

    #[test]
    fn blueprint_round_trip() {
        let wt = WidthTree::from_data(&[("a", 2), ("b", 2)], &[("a", "b", 1)], &[]).unwrap();
        let bp = knotify(&assemble(&wt).unwrap()).unwrap();
        let text = serialize_blueprint(&bp);
        let back = parse_blueprint(&text).unwrap();
        assert_eq!(back, bp);
    }

    #[test]
    fn dot_output_basics() {
        let wt = WidthTree::from_data(&[("v", 1)], &[], &[]).unwrap();
        let dot = export_dot(&wt);
        assert!(dot.contains("\"v\" [label=\"v: 1\"]"));

        let wt = WidthTree::from_data(&[("a", 2), ("b", 2)], &[("a", "b", 1)], &[]).unwrap();
        let dot = export_dot(&wt);
        assert!(dot.contains("\"a\" -> \"b\" [label=\"1\"]"));
    }
}
