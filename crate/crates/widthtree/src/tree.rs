//! Ditrees and width trees: the labelled directed-tree data model.
//!
//! A ditree is a directed graph whose underlying undirected graph is a tree,
//! with an optional set of degree-one vertices designated as boundary
//! vertices. A width tree attaches an integer label `>= -1` to every vertex
//! and edge, subject to two conditions: boundary vertices carry the same
//! label as their incident edge, and every vertex label dominates the sum of
//! the nonnegative labels on each side (incoming and outgoing separately).
//! Sides whose edges all carry negative labels impose no constraint.

use std::collections::HashMap;

use crate::error::{Error, Result, Side};

/// Directed tree with designated boundary leaves. Vertices are identified by
/// opaque strings; all structural queries are exposed both by id and by the
/// internal dense index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ditree {
    ids: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<(usize, usize)>,
    boundary: Vec<bool>,
    incoming: Vec<Vec<usize>>,
    outgoing: Vec<Vec<usize>>,
}

impl Ditree {
    pub fn new(vertices: &[&str], edges: &[(&str, &str)], boundary: &[&str]) -> Result<Ditree> {
        Ditree::from_parts(
            vertices.iter().map(|s| s.to_string()).collect(),
            edges
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect(),
            boundary.iter().map(|s| s.to_string()).collect(),
        )
    }

    pub fn from_parts(
        ids: Vec<String>,
        edge_ids: Vec<(String, String)>,
        boundary: Vec<String>,
    ) -> Result<Ditree> {
        if ids.is_empty() {
            return Err(Error::NotATree("a tree has at least one vertex".into()));
        }
        let mut index = HashMap::with_capacity(ids.len());
        for (i, id) in ids.iter().enumerate() {
            if index.insert(id.clone(), i).is_some() {
                return Err(Error::NotATree(format!("duplicate vertex id {id}")));
            }
        }
        let mut edges = Vec::with_capacity(edge_ids.len());
        let mut seen_pairs = HashMap::new();
        for (a, b) in &edge_ids {
            let ai = *index.get(a).ok_or_else(|| Error::UnknownVertex(a.clone()))?;
            let bi = *index.get(b).ok_or_else(|| Error::UnknownVertex(b.clone()))?;
            if ai == bi {
                return Err(Error::NotATree(format!("self-loop at {a}")));
            }
            let key = (ai.min(bi), ai.max(bi));
            if seen_pairs.insert(key, ()).is_some() {
                return Err(Error::NotATree(format!("multiple edges between {a} and {b}")));
            }
            edges.push((ai, bi));
        }
        if edges.len() != ids.len() - 1 {
            return Err(Error::NotATree(format!(
                "{} vertices need {} edges, found {}",
                ids.len(),
                ids.len() - 1,
                edges.len()
            )));
        }
        // Connectivity via union-find; with |E| = |V|-1 and no multi-edges,
        // connected is equivalent to acyclic.
        let mut parent: Vec<usize> = (0..ids.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(a, b) in &edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return Err(Error::NotATree("underlying graph contains a cycle".into()));
            }
            parent[ra] = rb;
        }

        let mut incoming = vec![Vec::new(); ids.len()];
        let mut outgoing = vec![Vec::new(); ids.len()];
        for (k, &(a, b)) in edges.iter().enumerate() {
            outgoing[a].push(k);
            incoming[b].push(k);
        }

        let mut bflags = vec![false; ids.len()];
        for b in &boundary {
            let i = *index.get(b).ok_or_else(|| Error::UnknownVertex(b.clone()))?;
            if incoming[i].len() + outgoing[i].len() != 1 {
                return Err(Error::BoundaryNotLeaf(b.clone()));
            }
            bflags[i] = true;
        }

        Ok(Ditree {
            ids,
            index,
            edges,
            boundary: bflags,
            incoming,
            outgoing,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = &str> {
        self.ids.iter().map(|s| s.as_str())
    }

    pub fn id(&self, v: usize) -> &str {
        &self.ids[v]
    }

    pub fn vertex_index(&self, id: &str) -> Result<usize> {
        self.index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(id.to_string()))
    }

    /// Edges as (tail, head) index pairs, in construction order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_index(&self, tail: &str, head: &str) -> Result<usize> {
        let t = self.vertex_index(tail)?;
        let h = self.vertex_index(head)?;
        self.edges
            .iter()
            .position(|&(a, b)| a == t && b == h)
            .ok_or_else(|| Error::UnknownEdge(tail.to_string(), head.to_string()))
    }

    pub fn edge_ids(&self, e: usize) -> (&str, &str) {
        let (a, b) = self.edges[e];
        (&self.ids[a], &self.ids[b])
    }

    pub fn incoming_edges(&self, v: usize) -> &[usize] {
        &self.incoming[v]
    }

    pub fn outgoing_edges(&self, v: usize) -> &[usize] {
        &self.outgoing[v]
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.incoming[v].len()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.outgoing[v].len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incoming[v].len() + self.outgoing[v].len()
    }

    pub fn is_boundary(&self, v: usize) -> bool {
        self.boundary[v]
    }

    pub fn has_boundary(&self) -> bool {
        self.boundary.iter().any(|&b| b)
    }

    pub fn boundary_ids(&self) -> Vec<String> {
        let mut out: Vec<String> = (0..self.vertex_count())
            .filter(|&v| self.boundary[v])
            .map(|v| self.ids[v].clone())
            .collect();
        out.sort();
        out
    }

    /// Degree-one vertices, boundary or not.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| self.degree(v) == 1).collect()
    }

    /// The neighbours of `v` over the underlying undirected tree.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree(v));
        for &e in &self.incoming[v] {
            out.push(self.edges[e].0);
        }
        for &e in &self.outgoing[v] {
            out.push(self.edges[e].1);
        }
        out
    }

    /// A ditree is a coherent path when it is a single vertex, or a path in
    /// which every interior vertex is the head of one edge and the tail of
    /// the other.
    pub fn is_coherent_path(&self) -> bool {
        if self.vertex_count() == 1 {
            return true;
        }
        let leaves = (0..self.vertex_count()).filter(|&v| self.degree(v) == 1).count();
        if leaves != 2 {
            return false;
        }
        (0..self.vertex_count()).all(|v| {
            self.degree(v) != 2 || (self.in_degree(v) == 1 && self.out_degree(v) == 1)
        })
    }

    /// Every edge reversed; labels and boundary are untouched.
    pub fn reversed(&self) -> Ditree {
        let mut rev = self.clone();
        rev.edges = self.edges.iter().map(|&(a, b)| (b, a)).collect();
        rev.incoming = self.outgoing.clone();
        rev.outgoing = self.incoming.clone();
        rev
    }
}

/// Sources, sinks, and the two near-degree counts used by the lower bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceSinkReport {
    pub sources: Vec<String>,
    pub sinks: Vec<String>,
    pub n2_minus: usize,
    pub n2_plus: usize,
}

/// Sources (no incoming edges), sinks (no outgoing edges), and the counts of
/// vertices with exactly one incoming (`n2_minus`) or outgoing (`n2_plus`)
/// edge.
pub fn sources_sinks(tree: &Ditree) -> SourceSinkReport {
    let mut sources = Vec::new();
    let mut sinks = Vec::new();
    let mut n2_minus = 0;
    let mut n2_plus = 0;
    for v in 0..tree.vertex_count() {
        if tree.in_degree(v) == 0 {
            sources.push(tree.id(v).to_string());
        }
        if tree.out_degree(v) == 0 {
            sinks.push(tree.id(v).to_string());
        }
        if tree.in_degree(v) == 1 {
            n2_minus += 1;
        }
        if tree.out_degree(v) == 1 {
            n2_plus += 1;
        }
    }
    sources.sort();
    sinks.sort();
    SourceSinkReport {
        sources,
        sinks,
        n2_minus,
        n2_plus,
    }
}

/// Total integer labelling of a ditree's vertices and edges, stored
/// positionally against the tree's dense indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelFunction {
    vertex_labels: Vec<i64>,
    edge_labels: Vec<i64>,
}

impl LabelFunction {
    pub fn from_maps(
        tree: &Ditree,
        vertex_labels: &HashMap<String, i64>,
        edge_labels: &HashMap<(String, String), i64>,
    ) -> Result<LabelFunction> {
        let mut vl = Vec::with_capacity(tree.vertex_count());
        for v in 0..tree.vertex_count() {
            let id = tree.id(v);
            let l = *vertex_labels
                .get(id)
                .ok_or_else(|| Error::MissingLabel(format!("vertex {id}")))?;
            vl.push(l);
        }
        let mut el = Vec::with_capacity(tree.edge_count());
        for e in 0..tree.edge_count() {
            let (t, h) = tree.edge_ids(e);
            let l = *edge_labels
                .get(&(t.to_string(), h.to_string()))
                .ok_or_else(|| Error::MissingLabel(format!("edge {t} -> {h}")))?;
            el.push(l);
        }
        LabelFunction::from_vecs(tree, vl, el)
    }

    /// Positional constructor; labels must align with the tree's indices.
    pub fn from_vecs(tree: &Ditree, vertex_labels: Vec<i64>, edge_labels: Vec<i64>) -> Result<LabelFunction> {
        if vertex_labels.len() != tree.vertex_count() || edge_labels.len() != tree.edge_count() {
            return Err(Error::InternalError(
                "label vectors do not match the tree".into(),
            ));
        }
        for (v, &l) in vertex_labels.iter().enumerate() {
            if l < -1 {
                return Err(Error::LabelBelowMinusOne {
                    item: format!("vertex {}", tree.id(v)),
                    label: l,
                });
            }
        }
        for (e, &l) in edge_labels.iter().enumerate() {
            if l < -1 {
                let (t, h) = tree.edge_ids(e);
                return Err(Error::LabelBelowMinusOne {
                    item: format!("edge {t} -> {h}"),
                    label: l,
                });
            }
        }
        Ok(LabelFunction {
            vertex_labels,
            edge_labels,
        })
    }

    pub fn vertex_label(&self, v: usize) -> i64 {
        self.vertex_labels[v]
    }

    pub fn edge_label(&self, e: usize) -> i64 {
        self.edge_labels[e]
    }

    pub fn vertex_labels(&self) -> &[i64] {
        &self.vertex_labels
    }

    pub fn edge_labels(&self) -> &[i64] {
        &self.edge_labels
    }

    pub(crate) fn set_vertex_label(&mut self, v: usize, l: i64) {
        self.vertex_labels[v] = l;
    }

    pub(crate) fn set_edge_label(&mut self, e: usize, l: i64) {
        self.edge_labels[e] = l;
    }

    pub(crate) fn bump_vertex(&mut self, v: usize, by: i64) {
        self.vertex_labels[v] += by;
    }

    pub(crate) fn bump_edge(&mut self, e: usize, by: i64) {
        self.edge_labels[e] += by;
    }

    /// Positional constructor without the floor check; for restrictions of
    /// labellings already known valid.
    pub(crate) fn from_vecs_unchecked(vertex_labels: Vec<i64>, edge_labels: Vec<i64>) -> LabelFunction {
        LabelFunction {
            vertex_labels,
            edge_labels,
        }
    }
}

/// Sum of the nonnegative labels among `edges`, plus whether any such edge
/// exists. Sides without a nonnegatively labelled edge impose no constraint.
fn nonneg_side_sum(labels: &LabelFunction, edges: &[usize]) -> (i64, bool) {
    let mut sum = 0;
    let mut any = false;
    for &e in edges {
        let l = labels.edge_label(e);
        if l >= 0 {
            sum += l;
            any = true;
        }
    }
    (sum, any)
}

/// A validated width tree: a ditree with a total label function satisfying
/// the boundary and cut conditions, plus an optional distance threshold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WidthTree {
    tree: Ditree,
    lambda: LabelFunction,
    delta: Option<u64>,
}

/// Checks both width-tree conditions and returns the witness on success.
pub fn validate(tree: Ditree, lambda: LabelFunction) -> Result<WidthTree> {
    if lambda.vertex_labels.len() != tree.vertex_count()
        || lambda.edge_labels.len() != tree.edge_count()
    {
        return Err(Error::InternalError("labels do not cover the tree".into()));
    }
    for v in 0..tree.vertex_count() {
        if tree.is_boundary(v) {
            let e = tree
                .incoming_edges(v)
                .iter()
                .chain(tree.outgoing_edges(v))
                .next()
                .copied()
                .expect("boundary vertices have degree 1");
            if lambda.vertex_label(v) != lambda.edge_label(e) {
                return Err(Error::BoundaryMismatch {
                    vertex: tree.id(v).to_string(),
                    vertex_label: lambda.vertex_label(v),
                    edge_label: lambda.edge_label(e),
                });
            }
        }
        let (in_sum, in_any) = nonneg_side_sum(&lambda, tree.incoming_edges(v));
        if in_any && lambda.vertex_label(v) < in_sum {
            return Err(Error::CutViolation {
                vertex: tree.id(v).to_string(),
                side: Side::Incoming,
            });
        }
        let (out_sum, out_any) = nonneg_side_sum(&lambda, tree.outgoing_edges(v));
        if out_any && lambda.vertex_label(v) < out_sum {
            return Err(Error::CutViolation {
                vertex: tree.id(v).to_string(),
                side: Side::Outgoing,
            });
        }
    }
    Ok(WidthTree {
        tree,
        lambda,
        delta: None,
    })
}

/// Classification flags per the slimness definition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub nonnegative: bool,
    pub positive: bool,
    pub productless: bool,
    pub slim: bool,
}

impl WidthTree {
    /// Convenience constructor from literal data.
    pub fn from_data(
        vertices: &[(&str, i64)],
        edges: &[(&str, &str, i64)],
        boundary: &[&str],
    ) -> Result<WidthTree> {
        let tree = Ditree::new(
            &vertices.iter().map(|(id, _)| *id).collect::<Vec<_>>(),
            &edges.iter().map(|(t, h, _)| (*t, *h)).collect::<Vec<_>>(),
            boundary,
        )?;
        let lambda = LabelFunction::from_vecs(
            &tree,
            vertices.iter().map(|&(_, l)| l).collect(),
            edges.iter().map(|&(_, _, l)| l).collect(),
        )?;
        validate(tree, lambda)
    }

    pub fn tree(&self) -> &Ditree {
        &self.tree
    }

    pub fn labels(&self) -> &LabelFunction {
        &self.lambda
    }

    pub fn delta(&self) -> Option<u64> {
        self.delta
    }

    pub fn with_delta(mut self, delta: Option<u64>) -> WidthTree {
        self.delta = delta;
        self
    }

    pub fn vertex_label(&self, v: usize) -> i64 {
        self.lambda.vertex_label(v)
    }

    pub fn edge_label(&self, e: usize) -> i64 {
        self.lambda.edge_label(e)
    }

    /// The same width tree with all edge orientations reversed.
    pub fn reversed(&self) -> WidthTree {
        WidthTree {
            tree: self.tree.reversed(),
            lambda: self.lambda.clone(),
            delta: self.delta,
        }
    }

    /// True when edge `e` is a product edge at either of its endpoints: the
    /// endpoint is not a boundary vertex, the edge is the sole incoming or
    /// sole outgoing edge there, and the labels agree.
    pub fn edge_is_product(&self, e: usize) -> bool {
        let (tail, head) = self.tree.edges()[e];
        let le = self.lambda.edge_label(e);
        // At the head, e can be the sole incoming edge.
        if !self.tree.is_boundary(head)
            && self.tree.in_degree(head) == 1
            && self.lambda.vertex_label(head) == le
        {
            return true;
        }
        // At the tail, e can be the sole outgoing edge.
        if !self.tree.is_boundary(tail)
            && self.tree.out_degree(tail) == 1
            && self.lambda.vertex_label(tail) == le
        {
            return true;
        }
        false
    }

    pub fn is_product_edge(&self, tail: &str, head: &str) -> Result<bool> {
        let e = self.tree.edge_index(tail, head)?;
        Ok(self.edge_is_product(e))
    }

    pub fn product_edges(&self) -> Vec<usize> {
        (0..self.tree.edge_count())
            .filter(|&e| self.edge_is_product(e))
            .collect()
    }

    pub fn is_productless(&self) -> bool {
        (0..self.tree.edge_count()).all(|e| !self.edge_is_product(e))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.lambda.vertex_labels.iter().all(|&l| l >= 0)
            && self.lambda.edge_labels.iter().all(|&l| l >= 0)
    }

    pub fn is_positive(&self) -> bool {
        self.lambda.vertex_labels.iter().all(|&l| l >= 1)
            && self.lambda.edge_labels.iter().all(|&l| l >= 1)
    }

    pub fn classify(&self) -> Classification {
        let nonnegative = self.is_nonnegative();
        let productless = self.is_productless();
        let slim = nonnegative && productless && matches!(self.delta, Some(d) if d >= 2);
        Classification {
            nonnegative,
            positive: self.is_positive(),
            productless,
            slim,
        }
    }

    pub(crate) fn parts_mut(&mut self) -> (&Ditree, &mut LabelFunction) {
        (&self.tree, &mut self.lambda)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_is_valid() {
        let wt = WidthTree::from_data(&[("v", 1)], &[], &[]).unwrap();
        assert_eq!(wt.vertex_label(0), 1);
    }

    #[test]
    fn two_vertex_path_is_valid() {
        let wt = WidthTree::from_data(&[("a", 2), ("b", 2)], &[("a", "b", 1)], &[]).unwrap();
        assert!(wt.is_positive());
    }

    #[test]
    fn cut_violation_on_outgoing_side() {
        let err = WidthTree::from_data(&[("a", 0), ("b", 2)], &[("a", "b", 1)], &[]).unwrap_err();
        assert_eq!(
            err,
            Error::CutViolation {
                vertex: "a".into(),
                side: Side::Outgoing
            }
        );
    }

    #[test]
    fn boundary_label_must_match_edge() {
        let err =
            WidthTree::from_data(&[("a", 2), ("b", 2)], &[("a", "b", 1)], &["b"]).unwrap_err();
        assert!(matches!(err, Error::BoundaryMismatch { .. }));
        let ok = WidthTree::from_data(&[("a", 2), ("b", 1)], &[("a", "b", 1)], &["b"]).unwrap();
        assert!(ok.tree().is_boundary(1));
    }

    #[test]
    fn negative_boundary_pair_is_accepted() {
        // A -1 label is allowed when every incident edge also carries -1,
        // making both side conditions vacuous.
        let wt = WidthTree::from_data(&[("a", -1), ("b", -1)], &[("a", "b", -1)], &["b"]).unwrap();
        assert!(!wt.is_nonnegative());
        let lone = WidthTree::from_data(&[("v", -1)], &[], &[]).unwrap();
        assert_eq!(lone.vertex_label(0), -1);
    }

    #[test]
    fn labels_below_minus_one_rejected() {
        let err = WidthTree::from_data(&[("v", -2)], &[], &[]).unwrap_err();
        assert!(matches!(err, Error::LabelBelowMinusOne { .. }));
    }

    #[test]
    fn rejects_cycles_and_duplicates() {
        assert!(matches!(
            Ditree::new(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")], &[]),
            Err(Error::NotATree(_))
        ));
        assert!(matches!(
            Ditree::new(&["a", "b"], &[("a", "b"), ("b", "a")], &[]),
            Err(Error::NotATree(_))
        ));
        assert!(matches!(
            Ditree::new(&["a"], &[("a", "a")], &[]),
            Err(Error::NotATree(_))
        ));
    }

    #[test]
    fn boundary_must_be_a_leaf() {
        let err = Ditree::new(
            &["a", "b", "c"],
            &[("a", "b"), ("b", "c")],
            &["b"],
        )
        .unwrap_err();
        assert_eq!(err, Error::BoundaryNotLeaf("b".into()));
    }

    #[test]
    fn product_edge_cases() {
        // Sole outgoing edge at a with matching label.
        let wt = WidthTree::from_data(&[("a", 2), ("b", 2)], &[("a", "b", 2)], &[]).unwrap();
        assert!(wt.is_product_edge("a", "b").unwrap());

        let wt = WidthTree::from_data(&[("a", 2), ("b", 2)], &[("a", "b", 1)], &[]).unwrap();
        assert!(!wt.is_product_edge("a", "b").unwrap());

        // Boundary endpoints are excluded even when labels match.
        let wt = WidthTree::from_data(&[("a", 2), ("b", 1)], &[("a", "b", 1)], &["b"]).unwrap();
        assert!(!wt.is_product_edge("a", "b").unwrap());

        assert!(matches!(
            wt.is_product_edge("b", "a"),
            Err(Error::UnknownEdge(_, _))
        ));
    }

    #[test]
    fn classify_flags() {
        let wt = WidthTree::from_data(&[("a", 2), ("b", 2)], &[("a", "b", 2)], &[])
            .unwrap()
            .with_delta(Some(2));
        let c = wt.classify();
        assert!(c.nonnegative && c.positive);
        assert!(!c.productless && !c.slim);

        let lone = WidthTree::from_data(&[("v", -1)], &[], &[])
            .unwrap()
            .with_delta(Some(2));
        let c = lone.classify();
        assert!(!c.nonnegative && !c.slim);

        // Slim needs a threshold.
        let wt = WidthTree::from_data(&[("a", 2), ("b", 2)], &[("a", "b", 1)], &[]).unwrap();
        assert!(!wt.classify().slim);
        assert!(wt.clone().with_delta(Some(2)).classify().slim);
        assert!(!wt.with_delta(Some(1)).classify().slim);
    }

    #[test]
    fn source_sink_report() {
        let t = Ditree::new(&["a", "v", "b"], &[("a", "v"), ("v", "b")], &[]).unwrap();
        let r = sources_sinks(&t);
        assert_eq!(r.sources, vec!["a".to_string()]);
        assert_eq!(r.sinks, vec!["b".to_string()]);
        assert_eq!((r.n2_minus, r.n2_plus), (2, 2));

        let lone = Ditree::new(&["v"], &[], &[]).unwrap();
        let r = sources_sinks(&lone);
        assert_eq!(r.sources, vec!["v".to_string()]);
        assert_eq!(r.sinks, vec!["v".to_string()]);
        assert_eq!((r.n2_minus, r.n2_plus), (0, 0));
    }

    #[test]
    fn coherent_path_detection() {
        let t = Ditree::new(&["a", "v", "b"], &[("a", "v"), ("v", "b")], &[]).unwrap();
        assert!(t.is_coherent_path());
        let t = Ditree::new(&["a", "v", "b"], &[("a", "v"), ("b", "v")], &[]).unwrap();
        assert!(!t.is_coherent_path());
        let t = Ditree::new(
            &["c", "x", "y", "z"],
            &[("c", "x"), ("c", "y"), ("c", "z")],
            &[],
        )
        .unwrap();
        assert!(!t.is_coherent_path());
        let lone = Ditree::new(&["v"], &[], &[]).unwrap();
        assert!(lone.is_coherent_path());
    }
}
