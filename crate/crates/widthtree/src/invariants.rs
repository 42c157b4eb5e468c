//! Integer invariants of width trees and the amalgamation calculus.

use crate::error::{Error, Result};
use crate::tree::{validate, LabelFunction, WidthTree};

/// All invariants of one width tree in a single report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub net_extent: i64,
    pub width: i64,
    pub trunk: i64,
    /// Present only when the underlying ditree is a coherent path.
    pub gabai_candidate: Option<i64>,
    /// Net extent of the relabelling `2*l^2 - l`; equals `width - net_extent`.
    pub mu_net_extent: i64,
}

pub fn report(wt: &WidthTree) -> InvariantReport {
    let ne = net_extent(wt);
    let w = width(wt);
    InvariantReport {
        net_extent: ne,
        width: w,
        trunk: trunk(wt),
        gabai_candidate: gabai_candidate(wt).ok(),
        mu_net_extent: w - ne,
    }
}

/// Sum of vertex labels minus sum of edge labels.
pub fn net_extent(wt: &WidthTree) -> i64 {
    let v: i64 = wt.labels().vertex_labels().iter().sum();
    let e: i64 = wt.labels().edge_labels().iter().sum();
    v - e
}

/// Net extent computed per vertex: every edge is charged to its head in the
/// first component and to its tail in the second, so both equal `net_extent`.
pub fn net_extent_by_vertex_sums(wt: &WidthTree) -> (i64, i64) {
    let tree = wt.tree();
    let mut via_incoming = 0;
    let mut via_outgoing = 0;
    for v in 0..tree.vertex_count() {
        let in_sum: i64 = tree.incoming_edges(v).iter().map(|&e| wt.edge_label(e)).sum();
        let out_sum: i64 = tree.outgoing_edges(v).iter().map(|&e| wt.edge_label(e)).sum();
        via_incoming += wt.vertex_label(v) - in_sum;
        via_outgoing += wt.vertex_label(v) - out_sum;
    }
    (via_incoming, via_outgoing)
}

/// `2 * (sum of vertex labels squared - sum of edge labels squared)`.
pub fn width(wt: &WidthTree) -> i64 {
    let v: i64 = wt.labels().vertex_labels().iter().map(|&l| l * l).sum();
    let e: i64 = wt.labels().edge_labels().iter().map(|&l| l * l).sum();
    2 * (v - e)
}

/// Maximum vertex label.
pub fn trunk(wt: &WidthTree) -> i64 {
    *wt.labels()
        .vertex_labels()
        .iter()
        .max()
        .expect("trees are nonempty")
}

/// Leaf-elimination rule for `amalgamate_leaf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AmalgamationMode {
    /// New neighbour label `l(u) + l(w) - l(f)`; preserves net extent.
    Sum,
    /// New neighbour label `max(l(u), l(w))`; preserves the trunk.
    Max,
}

/// Removes the degree-one vertex `leaf` and its edge, relabelling the
/// neighbour according to `mode`. Both endpoints must be nonboundary.
pub fn amalgamate_leaf(wt: &WidthTree, leaf: &str, mode: AmalgamationMode) -> Result<WidthTree> {
    let tree = wt.tree();
    let u = tree.vertex_index(leaf)?;
    if tree.degree(u) != 1 {
        return Err(Error::NotALeaf(leaf.to_string()));
    }
    if tree.is_boundary(u) {
        return Err(Error::BoundaryLeaf(leaf.to_string()));
    }
    let f = tree
        .incoming_edges(u)
        .iter()
        .chain(tree.outgoing_edges(u))
        .next()
        .copied()
        .expect("degree-one vertex has an edge");
    let (t, h) = tree.edges()[f];
    let w = if t == u { h } else { t };
    if tree.is_boundary(w) {
        return Err(Error::BoundaryLeaf(tree.id(w).to_string()));
    }

    let new_label = match mode {
        AmalgamationMode::Sum => wt.vertex_label(u) + wt.vertex_label(w) - wt.edge_label(f),
        AmalgamationMode::Max => wt.vertex_label(u).max(wt.vertex_label(w)),
    };

    let mut ids = Vec::with_capacity(tree.vertex_count() - 1);
    let mut vlabels = Vec::with_capacity(tree.vertex_count() - 1);
    let mut boundary = Vec::new();
    for v in 0..tree.vertex_count() {
        if v == u {
            continue;
        }
        ids.push(tree.id(v).to_string());
        vlabels.push(if v == w { new_label } else { wt.vertex_label(v) });
        if tree.is_boundary(v) {
            boundary.push(tree.id(v).to_string());
        }
    }
    let mut edges = Vec::with_capacity(tree.edge_count() - 1);
    let mut elabels = Vec::with_capacity(tree.edge_count() - 1);
    for e in 0..tree.edge_count() {
        if e == f {
            continue;
        }
        let (a, b) = tree.edges()[e];
        edges.push((tree.id(a).to_string(), tree.id(b).to_string()));
        elabels.push(wt.edge_label(e));
    }

    let new_tree = crate::tree::Ditree::from_parts(ids, edges, boundary)?;
    let lambda = LabelFunction::from_vecs(&new_tree, vlabels, elabels)?;
    let out = validate(new_tree, lambda)?;
    Ok(out.with_delta(wt.delta()))
}

/// Repeatedly amalgamates leaves (smallest vertex id first) until a single
/// vertex remains; returns its label. With `Sum` this is the net extent, with
/// `Max` the trunk.
pub fn full_amalgamation(wt: &WidthTree, mode: AmalgamationMode) -> Result<i64> {
    if wt.tree().has_boundary() {
        return Err(Error::HasBoundary);
    }
    let mut current = wt.clone();
    while current.tree().vertex_count() > 1 {
        let leaf = current
            .tree()
            .leaves()
            .into_iter()
            .map(|v| current.tree().id(v).to_string())
            .min()
            .expect("trees with >= 2 vertices have leaves");
        current = amalgamate_leaf(&current, &leaf, mode)?;
    }
    Ok(current.vertex_label(0))
}

/// Coherent-path Gabai width candidate: `width + 4*net_extent + 2`,
/// equivalently `2 * sum (l(v)+1)^2 - 2 * sum (l(e)+1)^2`.
pub fn gabai_candidate(wt: &WidthTree) -> Result<i64> {
    if !wt.tree().is_coherent_path() {
        return Err(Error::NotCoherentPath);
    }
    Ok(width(wt) + 4 * net_extent(wt) + 2)
}

/// Relabels by `l -> 2*l^2 - l`. Requires every label `>= 1` so the result is
/// positive; the transform preserves productlessness and the width-tree
/// conditions, and its net extent is `width - net_extent` of the input.
pub fn mu_transform(wt: &WidthTree) -> Result<WidthTree> {
    let tree = wt.tree();
    for v in 0..tree.vertex_count() {
        if wt.vertex_label(v) < 1 {
            return Err(Error::LabelTooSmall {
                item: format!("vertex {}", tree.id(v)),
                label: wt.vertex_label(v),
                min: 1,
            });
        }
    }
    for e in 0..tree.edge_count() {
        if wt.edge_label(e) < 1 {
            let (t, h) = tree.edge_ids(e);
            return Err(Error::LabelTooSmall {
                item: format!("edge {t} -> {h}"),
                label: wt.edge_label(e),
                min: 1,
            });
        }
    }
    let mu = |l: i64| 2 * l * l - l;
    let vlabels = wt.labels().vertex_labels().iter().map(|&l| mu(l)).collect();
    let elabels = wt.labels().edge_labels().iter().map(|&l| mu(l)).collect();
    let lambda = LabelFunction::from_vecs(tree, vlabels, elabels)?;
    let out = validate(tree.clone(), lambda)?;
    Ok(out.with_delta(wt.delta()))
}

/// Edge-label flags of a slim width tree: labels -1, 0, and 1 indicate a
/// split tangle, a composite tangle, and a Conway sphere or four-punctured
/// boundary component respectively.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TopologicalFlags {
    pub has_minus1_edge: bool,
    pub has_zero_edge: bool,
    pub has_one_edge: bool,
}

pub fn topological_flags(wt: &WidthTree) -> Result<TopologicalFlags> {
    if !wt.classify().slim {
        return Err(Error::NotSlim);
    }
    let labels = wt.labels().edge_labels();
    Ok(TopologicalFlags {
        has_minus1_edge: labels.contains(&-1),
        has_zero_edge: labels.contains(&0),
        has_one_edge: labels.contains(&1),
    })
}
