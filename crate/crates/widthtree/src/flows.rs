//! Augmented ditrees, conservative flows, and the min-flow/max-cut bound.
//!
//! The net extent of a positive productless width tree is bounded below by
//! the maximum size of a strong source-sink cut on the augmented ditree, and
//! the bound is attained: `make_flow` converts a labelling into a
//! conservative flow of the same net extent, and `min_flow_max_cut` shrinks
//! that flow along adjusting paths until its net extent equals a cut size.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::tree::{validate, Ditree, LabelFunction, WidthTree};

/// The augmented ditree: one fresh out-neighbour for every vertex with a
/// single outgoing edge and one fresh in-neighbour for every vertex with a
/// single incoming edge. Base vertices and edges keep their indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentedDitree {
    tree: Ditree,
    base_vertices: usize,
    base_edges: usize,
    plus_vertex: Vec<Option<usize>>,
    minus_vertex: Vec<Option<usize>>,
}

impl AugmentedDitree {
    /// The full augmented ditree.
    pub fn tree(&self) -> &Ditree {
        &self.tree
    }

    pub fn base_vertex_count(&self) -> usize {
        self.base_vertices
    }

    pub fn base_edge_count(&self) -> usize {
        self.base_edges
    }

    pub fn is_augmenting_vertex(&self, v: usize) -> bool {
        v >= self.base_vertices
    }

    pub fn is_augmenting_edge(&self, e: usize) -> bool {
        e >= self.base_edges
    }

    /// Id of the augmenting out-neighbour of base vertex `id`, if present.
    pub fn plus_id(&self, id: &str) -> Option<&str> {
        let v = self.tree.vertex_index(id).ok()?;
        self.plus_vertex.get(v)?.map(|a| self.tree.id(a))
    }

    pub fn minus_id(&self, id: &str) -> Option<&str> {
        let v = self.tree.vertex_index(id).ok()?;
        self.minus_vertex.get(v)?.map(|a| self.tree.id(a))
    }

    fn matches_base(&self, base: &Ditree) -> bool {
        if base.vertex_count() != self.base_vertices || base.edge_count() != self.base_edges {
            return false;
        }
        (0..self.base_vertices).all(|v| base.id(v) == self.tree.id(v))
            && base.edges() == &self.tree.edges()[..self.base_edges]
    }
}

fn fresh_id(taken: &mut std::collections::HashSet<String>, base: &str, sign: char) -> String {
    let mut id = format!("{base}{sign}");
    while !taken.insert(id.clone()) {
        id.push('\'');
    }
    id
}

/// Builds the augmented ditree of a boundaryless ditree.
pub fn augment(tree: &Ditree) -> Result<AugmentedDitree> {
    if tree.has_boundary() {
        return Err(Error::HasBoundary);
    }
    let n = tree.vertex_count();
    let mut taken: std::collections::HashSet<String> =
        tree.vertex_ids().map(|s| s.to_string()).collect();
    let mut ids: Vec<String> = tree.vertex_ids().map(|s| s.to_string()).collect();
    let mut edges: Vec<(String, String)> = tree
        .edges()
        .iter()
        .map(|&(a, b)| (tree.id(a).to_string(), tree.id(b).to_string()))
        .collect();
    let mut plus_vertex = vec![None; n];
    let mut minus_vertex = vec![None; n];
    for v in 0..n {
        if tree.out_degree(v) == 1 {
            let id = fresh_id(&mut taken, tree.id(v), '+');
            plus_vertex[v] = Some(ids.len());
            edges.push((tree.id(v).to_string(), id.clone()));
            ids.push(id);
        }
        if tree.in_degree(v) == 1 {
            let id = fresh_id(&mut taken, tree.id(v), '-');
            minus_vertex[v] = Some(ids.len());
            edges.push((id.clone(), tree.id(v).to_string()));
            ids.push(id);
        }
    }
    let full = Ditree::from_parts(ids, edges, Vec::new())?;
    Ok(AugmentedDitree {
        tree: full,
        base_vertices: n,
        base_edges: tree.edge_count(),
        plus_vertex,
        minus_vertex,
    })
}

/// Extends the labels of a positive productless boundaryless width tree to
/// its augmented ditree by labelling every augmenting vertex and edge 1. The
/// result is a positive width tree whose only product edges are augmenting,
/// with the same net extent.
pub fn extend_labels(wt: &WidthTree, aug: &AugmentedDitree) -> Result<LabelFunction> {
    if !wt.is_positive() {
        return Err(Error::NotPositive);
    }
    if !wt.is_productless() {
        return Err(Error::NotProductless);
    }
    if !aug.matches_base(wt.tree()) {
        return Err(Error::HostMismatch(
            "augmented ditree was not built from this width tree".into(),
        ));
    }
    let full = aug.tree();
    let mut vlabels = vec![1i64; full.vertex_count()];
    let mut elabels = vec![1i64; full.edge_count()];
    vlabels[..aug.base_vertices].copy_from_slice(wt.labels().vertex_labels());
    elabels[..aug.base_edges].copy_from_slice(wt.labels().edge_labels());
    LabelFunction::from_vecs(full, vlabels, elabels)
}

/// A conservative positive labelling of an augmented ditree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flow {
    host: AugmentedDitree,
    values: LabelFunction,
}

impl Flow {
    pub fn host(&self) -> &AugmentedDitree {
        &self.host
    }

    pub fn values(&self) -> &LabelFunction {
        &self.values
    }

    pub fn vertex_value(&self, v: usize) -> i64 {
        self.values.vertex_label(v)
    }

    pub fn edge_value(&self, e: usize) -> i64 {
        self.values.edge_label(e)
    }

    pub fn net_extent(&self) -> i64 {
        let v: i64 = self.values.vertex_labels().iter().sum();
        let e: i64 = self.values.edge_labels().iter().sum();
        v - e
    }

    /// Flow constraints: on each nonempty side of every vertex, the vertex
    /// value equals the side's edge-value sum.
    pub fn is_conservative(&self) -> bool {
        is_conservative(self.host.tree(), &self.values)
    }

    /// The flow restricted to the base ditree.
    pub fn restrict_to_base(&self) -> LabelFunction {
        let v = self.values.vertex_labels()[..self.host.base_vertices].to_vec();
        let e = self.values.edge_labels()[..self.host.base_edges].to_vec();
        LabelFunction::from_vecs_unchecked(v, e)
    }
}

fn is_conservative(tree: &Ditree, values: &LabelFunction) -> bool {
    (0..tree.vertex_count()).all(|v| {
        let in_sum: i64 = tree.incoming_edges(v).iter().map(|&e| values.edge_label(e)).sum();
        let out_sum: i64 = tree.outgoing_edges(v).iter().map(|&e| values.edge_label(e)).sum();
        (tree.in_degree(v) == 0 || values.vertex_label(v) == in_sum)
            && (tree.out_degree(v) == 0 || values.vertex_label(v) == out_sum)
    })
}

/// Vertices in breadth layers: layer of `v` is the least length of a directed
/// path from a source to `v`. Ties within a layer break by vertex id.
fn breadth_order(tree: &Ditree) -> Vec<usize> {
    let n = tree.vertex_count();
    let mut layer = vec![usize::MAX; n];
    let mut frontier: Vec<usize> = (0..n).filter(|&v| tree.in_degree(v) == 0).collect();
    let mut depth = 0;
    let mut order = Vec::with_capacity(n);
    while !frontier.is_empty() {
        frontier.sort_by(|&a, &b| tree.id(a).cmp(tree.id(b)));
        let mut next = Vec::new();
        for &v in &frontier {
            if layer[v] != usize::MAX {
                continue;
            }
            layer[v] = depth;
            order.push(v);
            for &e in tree.outgoing_edges(v) {
                let h = tree.edges()[e].1;
                if layer[h] == usize::MAX {
                    next.push(h);
                }
            }
        }
        frontier = next;
        depth += 1;
    }
    debug_assert_eq!(order.len(), n, "every vertex is reachable from a source");
    order
}

/// One forward sweep of the flow-construction algorithm: after it, every
/// non-sink vertex label equals its outgoing edge-label sum, and each
/// vertex's label-minus-incoming-sum is unchanged.
fn forward_pass(tree: &Ditree, labels: &mut LabelFunction) -> Result<()> {
    // Special edge at each non-sink vertex: the outgoing edge with the
    // smallest head id.
    let special: Vec<Option<usize>> = (0..tree.vertex_count())
        .map(|v| {
            tree.outgoing_edges(v)
                .iter()
                .copied()
                .min_by(|&a, &b| tree.id(tree.edges()[a].1).cmp(tree.id(tree.edges()[b].1)))
        })
        .collect();
    for v in breadth_order(tree) {
        let Some(first) = special[v] else { continue };
        let out_sum: i64 = tree.outgoing_edges(v).iter().map(|&e| labels.edge_label(e)).sum();
        let delta = labels.vertex_label(v) - out_sum;
        if delta < 0 {
            return Err(Error::InternalError(format!(
                "negative surplus at vertex {}",
                tree.id(v)
            )));
        }
        if delta == 0 {
            continue;
        }
        // Push the surplus down the maximal special-edge path from v.
        let mut e = first;
        loop {
            labels.bump_edge(e, delta);
            let head = tree.edges()[e].1;
            labels.bump_vertex(head, delta);
            match special[head] {
                Some(next) => e = next,
                None => break,
            }
        }
    }
    Ok(())
}

/// Converts a positive productless boundaryless width tree into a
/// conservative flow on its augmented ditree, pointwise at least the extended
/// labelling and with the same net extent.
pub fn make_flow(wt: &WidthTree) -> Result<Flow> {
    let aug = augment(wt.tree())?;
    let extended = extend_labels(wt, &aug)?;
    let mut values = extended.clone();
    forward_pass(aug.tree(), &mut values)?;
    let reversed = aug.tree().reversed();
    forward_pass(&reversed, &mut values)?;

    let flow = Flow { host: aug, values };
    debug_assert!(flow.is_conservative());
    debug_assert!(flow
        .values
        .vertex_labels()
        .iter()
        .zip(extended.vertex_labels())
        .all(|(f, l)| f >= l));
    debug_assert!(flow
        .values
        .edge_labels()
        .iter()
        .zip(extended.edge_labels())
        .all(|(f, l)| f >= l));
    debug_assert_eq!(flow.net_extent(), crate::invariants::net_extent(wt));
    Ok(flow)
}

/// A strong source-sink cut: a vertex set containing every source, no sink,
/// and with no edge pointing into it from outside.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongCut {
    host: Ditree,
    members: Vec<bool>,
}

impl StrongCut {
    pub fn new(host: &Ditree, members: &[&str]) -> Result<StrongCut> {
        let mut flags = vec![false; host.vertex_count()];
        for id in members {
            flags[host.vertex_index(id)?] = true;
        }
        StrongCut::from_flags(host.clone(), flags)
    }

    pub(crate) fn from_flags(host: Ditree, members: Vec<bool>) -> Result<StrongCut> {
        for v in 0..host.vertex_count() {
            if host.in_degree(v) == 0 && !members[v] {
                return Err(Error::InvalidCut(format!(
                    "source {} is not a member",
                    host.id(v)
                )));
            }
            if host.out_degree(v) == 0 && members[v] {
                return Err(Error::InvalidCut(format!(
                    "sink {} is a member",
                    host.id(v)
                )));
            }
        }
        for &(t, h) in host.edges() {
            if !members[t] && members[h] {
                return Err(Error::InvalidCut(format!(
                    "edge {} -> {} enters the cut",
                    host.id(t),
                    host.id(h)
                )));
            }
        }
        Ok(StrongCut { host, members })
    }

    pub fn host(&self) -> &Ditree {
        &self.host
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members[v]
    }

    pub fn member_ids(&self) -> Vec<String> {
        let mut out: Vec<String> = (0..self.host.vertex_count())
            .filter(|&v| self.members[v])
            .map(|v| self.host.id(v).to_string())
            .collect();
        out.sort();
        out
    }

    /// Number of edges with tail inside and head outside.
    pub fn size(&self) -> usize {
        self.host
            .edges()
            .iter()
            .filter(|&&(t, h)| self.members[t] && !self.members[h])
            .count()
    }
}

pub fn cut_size(cut: &StrongCut) -> usize {
    cut.size()
}

/// Total flow over the edges leaving the cut. For a conservative flow this
/// equals the flow's net extent, whatever the cut.
pub fn cut_value(flow: &Flow, cut: &StrongCut) -> Result<i64> {
    if cut.host != *flow.host.tree() {
        return Err(Error::HostMismatch("cut host differs from flow host".into()));
    }
    Ok(cut
        .host
        .edges()
        .iter()
        .enumerate()
        .filter(|&(_, &(t, h))| cut.members[t] && !cut.members[h])
        .map(|(e, _)| flow.edge_value(e))
        .sum())
}

/// Exact maximum strong cut by exhaustive enumeration; the reported cut is
/// the lexicographically least maximizer. Only for small hosts.
pub fn max_cut_bruteforce(tree: &Ditree) -> Result<(usize, StrongCut)> {
    let n = tree.vertex_count();
    if n > 25 {
        return Err(Error::TooLarge(format!("{n} vertices")));
    }
    // Sources are forced in, sinks are forced out; only the rest vary.
    let free: Vec<usize> = (0..n)
        .filter(|&v| tree.in_degree(v) > 0 && tree.out_degree(v) > 0)
        .collect();
    let mut flags = vec![false; n];
    for v in 0..n {
        if tree.in_degree(v) == 0 {
            flags[v] = true;
        }
    }
    if (0..n).any(|v| tree.in_degree(v) == 0 && tree.out_degree(v) == 0) {
        return Err(Error::NoValidCut);
    }
    let mut best: Option<(usize, Vec<String>, Vec<bool>)> = None;
    for mask in 0u64..(1 << free.len()) {
        for (i, &v) in free.iter().enumerate() {
            flags[v] = mask & (1 << i) != 0;
        }
        let mut size = 0;
        let mut ok = true;
        for &(t, h) in tree.edges() {
            if flags[t] && !flags[h] {
                size += 1;
            } else if !flags[t] && flags[h] {
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        let candidate_ids = || {
            let mut ids: Vec<String> = (0..n)
                .filter(|&v| flags[v])
                .map(|v| tree.id(v).to_string())
                .collect();
            ids.sort();
            ids
        };
        match &best {
            Some((s, ids, _)) if *s > size => {}
            Some((s, ids, _)) if *s == size => {
                let cand = candidate_ids();
                if cand < *ids {
                    best = Some((size, cand, flags.clone()));
                }
            }
            _ => best = Some((size, candidate_ids(), flags.clone())),
        }
    }
    match best {
        Some((size, _, flags)) => Ok((size, StrongCut::from_flags(tree.clone(), flags)?)),
        None => Err(Error::NoValidCut),
    }
}

/// Exact maximum strong cut size by tree dynamic programming. Returns None
/// when no valid cut exists (a vertex is simultaneously source and sink).
fn max_cut_dp(tree: &Ditree) -> Option<usize> {
    let n = tree.vertex_count();
    // dp[v][0] = best with v outside, dp[v][1] = best with v inside.
    let mut dp = vec![[None::<i64>; 2]; n];
    let mut visited = vec![false; n];
    // Iterative post-order over the underlying tree rooted at 0.
    let mut stack = vec![(0usize, usize::MAX, false)];
    while let Some((v, parent, processed)) = stack.pop() {
        if !processed {
            visited[v] = true;
            stack.push((v, parent, true));
            for u in tree.neighbors(v) {
                if u != parent && !visited[u] {
                    stack.push((u, v, false));
                }
            }
            continue;
        }
        for state in 0..2 {
            let inside = state == 1;
            if tree.in_degree(v) == 0 && !inside {
                dp[v][state] = None;
                continue;
            }
            if tree.out_degree(v) == 0 && inside {
                dp[v][state] = None;
                continue;
            }
            let mut acc = Some(0i64);
            for &e in tree.incoming_edges(v).iter().chain(tree.outgoing_edges(v)) {
                let (t, h) = tree.edges()[e];
                let child = if t == v { h } else { t };
                if child == parent {
                    continue;
                }
                let mut best = None;
                for cstate in 0..2 {
                    let Some(sub) = dp[child][cstate] else { continue };
                    let child_inside = cstate == 1;
                    let (tail_in, head_in) = if t == v {
                        (inside, child_inside)
                    } else {
                        (child_inside, inside)
                    };
                    if !tail_in && head_in {
                        continue; // edge would enter the cut
                    }
                    let gain = i64::from(tail_in && !head_in);
                    best = Some(best.map_or(sub + gain, |b: i64| b.max(sub + gain)));
                }
                match (acc, best) {
                    (Some(a), Some(b)) => acc = Some(a + b),
                    _ => {
                        acc = None;
                        break;
                    }
                }
            }
            dp[v][state] = acc;
        }
    }
    dp[0][0].max(dp[0][1]).map(|b| b as usize)
}

/// Which lower bound to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundMode {
    /// Maximum strong-cut size on the augmented ditree. Sound and attained:
    /// the minimum net extent over positive productless labellings.
    AugmentedCut,
    /// `n2_minus + n2_plus + max cut on the base tree`, as literally stated.
    /// Can exceed the attainable minimum on some ditrees.
    PaperFormula,
}

/// A lower bound on the net extent of every positive productless labelling
/// of `tree`.
pub fn lower_bound(tree: &Ditree, mode: BoundMode) -> Result<i64> {
    if tree.has_boundary() {
        return Err(Error::HasBoundary);
    }
    match mode {
        BoundMode::AugmentedCut => {
            let aug = augment(tree)?;
            max_cut_dp(aug.tree())
                .map(|s| s as i64)
                .ok_or(Error::NoValidCut)
        }
        BoundMode::PaperFormula => {
            let report = crate::tree::sources_sinks(tree);
            let cut = max_cut_dp(tree).ok_or(Error::NoValidCut)?;
            Ok((report.n2_minus + report.n2_plus + cut) as i64)
        }
    }
}

/// Proof object for the attained bound: a cut and a flow of equal size, and
/// the flow's restriction to the base tree as an extremal labelling.
#[derive(Debug, Clone)]
pub struct BoundCertificate {
    pub bound: i64,
    pub witness_cut: StrongCut,
    pub witness_flow: Flow,
    pub extremal_labelling: LabelFunction,
    /// Number of adjusting paths applied before termination.
    pub adjustments: usize,
}

/// Runs the adjusted search: repeatedly traverses from the sources along
/// forward edges carrying at least 2 and along all backward edges; each sink
/// reached yields an adjusting path that lowers the flow's net extent, and
/// termination yields a cut whose size equals the flow's net extent.
pub fn min_flow_max_cut(wt: &WidthTree) -> Result<BoundCertificate> {
    if wt.tree().edge_count() == 0 {
        return Err(Error::NoValidCut);
    }
    let flow = make_flow(wt)?;
    shrink_flow(flow)
}

fn shrink_flow(mut flow: Flow) -> Result<BoundCertificate> {
    let tree = flow.host.tree().clone();
    let n = tree.vertex_count();
    let mut adjustments = 0usize;
    let reached_flags = loop {
        let mut reached = vec![false; n];
        let mut parent: Vec<Option<(usize, usize, bool)>> = vec![None; n];
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| tree.in_degree(v) == 0).collect();
        for &v in &queue {
            reached[v] = true;
        }
        let mut found_sink = None;
        'search: while let Some(v) = queue.pop_front() {
            for &e in tree.outgoing_edges(v) {
                let h = tree.edges()[e].1;
                if !reached[h] && flow.edge_value(e) >= 2 {
                    reached[h] = true;
                    parent[h] = Some((v, e, true));
                    if tree.out_degree(h) == 0 {
                        found_sink = Some(h);
                        break 'search;
                    }
                    queue.push_back(h);
                }
            }
            for &e in tree.incoming_edges(v) {
                let t = tree.edges()[e].0;
                if !reached[t] {
                    reached[t] = true;
                    parent[t] = Some((v, e, false));
                    queue.push_back(t);
                }
            }
        }
        let Some(sink) = found_sink else {
            break reached;
        };

        // Trace the adjusting path back to a source.
        let mut path: Vec<(usize, bool)> = Vec::new();
        let mut at = sink;
        while let Some((prev, e, forward)) = parent[at] {
            path.push((e, forward));
            at = prev;
        }
        let epsilon = path
            .iter()
            .filter(|&&(_, fwd)| fwd)
            .map(|&(e, _)| flow.edge_value(e) - 1)
            .min()
            .ok_or_else(|| Error::InternalError("adjusting path with no forward edge".into()))?;
        debug_assert!(epsilon >= 1);
        let before = flow.net_extent();
        for &(e, forward) in &path {
            let v = flow.values.edge_label(e);
            flow.values
                .set_edge_label(e, if forward { v - epsilon } else { v + epsilon });
        }
        for v in 0..n {
            let in_sum: i64 = tree
                .incoming_edges(v)
                .iter()
                .map(|&e| flow.edge_value(e))
                .sum();
            let out_sum: i64 = tree
                .outgoing_edges(v)
                .iter()
                .map(|&e| flow.edge_value(e))
                .sum();
            flow.values.set_vertex_label(v, in_sum.max(out_sum));
        }
        debug_assert!(flow.is_conservative());
        debug_assert_eq!(flow.net_extent(), before - epsilon);
        adjustments += 1;
    };

    let cut = StrongCut::from_flags(tree, reached_flags)?;
    let bound = cut.size() as i64;
    debug_assert_eq!(bound, flow.net_extent());
    let extremal = flow.restrict_to_base();
    Ok(BoundCertificate {
        bound,
        witness_cut: cut,
        witness_flow: flow,
        extremal_labelling: extremal,
        adjustments,
    })
}

/// Builds the seed labelling (edges 1, vertices `max(in, out) + 1`), flows
/// it, and shrinks it: the returned width tree is positive, productless, and
/// attains the augmented-cut lower bound.
pub fn synthesize_equality_labelling(tree: &Ditree) -> Result<(WidthTree, BoundCertificate)> {
    if tree.has_boundary() {
        return Err(Error::HasBoundary);
    }
    if tree.edge_count() == 0 {
        return Err(Error::NoValidCut);
    }
    let vlabels: Vec<i64> = (0..tree.vertex_count())
        .map(|v| tree.in_degree(v).max(tree.out_degree(v)) as i64 + 1)
        .collect();
    let elabels = vec![1i64; tree.edge_count()];
    let lambda = LabelFunction::from_vecs(tree, vlabels, elabels)?;
    let seed = validate(tree.clone(), lambda)?;
    debug_assert!(seed.is_positive() && seed.is_productless());
    let cert = min_flow_max_cut(&seed)?;
    let extremal = validate(tree.clone(), cert.extremal_labelling.clone())?;
    debug_assert!(extremal.is_positive() && extremal.is_productless());
    Ok((extremal, cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::net_extent;
    use crate::tree::WidthTree;

    fn edge_tree(la: i64, lb: i64, le: i64) -> WidthTree {
        WidthTree::from_data(&[("a", la), ("b", lb)], &[("a", "b", le)], &[]).unwrap()
    }

    #[test]
    fn augment_shapes() {
        let lone = Ditree::new(&["v"], &[], &[]).unwrap();
        let aug = augment(&lone).unwrap();
        assert_eq!(aug.tree().vertex_count(), 1);
        assert_eq!(aug.tree().edge_count(), 0);

        let t = Ditree::new(&["a", "b"], &[("a", "b")], &[]).unwrap();
        let aug = augment(&t).unwrap();
        assert_eq!(aug.tree().vertex_count(), 4);
        assert_eq!(aug.tree().edge_count(), 3);
        assert!(aug.plus_id("a").is_some());
        assert!(aug.minus_id("b").is_some());
        assert!(aug.minus_id("a").is_none());

        let t = Ditree::new(&["a", "v", "b"], &[("a", "v"), ("v", "b")], &[]).unwrap();
        let aug = augment(&t).unwrap();
        assert_eq!(aug.tree().vertex_count(), 7);
        assert_eq!(aug.tree().edge_count(), 6);

        let bounded = Ditree::new(&["a", "b"], &[("a", "b")], &["b"]).unwrap();
        assert_eq!(augment(&bounded).unwrap_err(), Error::HasBoundary);
    }

    #[test]
    fn extended_labels_preserve_net_extent() {
        let wt = edge_tree(2, 2, 1);
        let aug = augment(wt.tree()).unwrap();
        let ext = extend_labels(&wt, &aug).unwrap();
        assert_eq!(ext.vertex_labels(), &[2, 2, 1, 1]);
        assert_eq!(ext.edge_labels(), &[1, 1, 1]);
        let sum: i64 = ext.vertex_labels().iter().sum::<i64>() - ext.edge_labels().iter().sum::<i64>();
        assert_eq!(sum, 3);

        let lone = WidthTree::from_data(&[("v", 4)], &[], &[]).unwrap();
        let aug = augment(lone.tree()).unwrap();
        let ext = extend_labels(&lone, &aug).unwrap();
        assert_eq!(ext.vertex_labels(), &[4]);

        let product = edge_tree(2, 2, 2);
        let aug = augment(product.tree()).unwrap();
        assert_eq!(
            extend_labels(&product, &aug).unwrap_err(),
            Error::NotProductless
        );
        let nonpos = WidthTree::from_data(&[("a", 2), ("b", 0)], &[("a", "b", 0)], &[]).unwrap();
        let aug = augment(nonpos.tree()).unwrap();
        assert_eq!(extend_labels(&nonpos, &aug).unwrap_err(), Error::NotPositive);
    }

    #[test]
    fn make_flow_small_cases() {
        // Already conservative after extension: 2 = 1 + 1 at both ends.
        let wt = edge_tree(2, 2, 1);
        let flow = make_flow(&wt).unwrap();
        assert!(flow.is_conservative());
        assert_eq!(flow.values().vertex_labels(), &[2, 2, 1, 1]);
        assert_eq!(flow.values().edge_labels(), &[1, 1, 1]);

        let wt = edge_tree(3, 3, 2);
        let flow = make_flow(&wt).unwrap();
        assert!(flow.is_conservative());
        assert_eq!(flow.net_extent(), 4);

        let lone = WidthTree::from_data(&[("v", 5)], &[], &[]).unwrap();
        let flow = make_flow(&lone).unwrap();
        assert_eq!(flow.vertex_value(0), 5);
        assert!(flow.is_conservative());
    }

    #[test]
    fn cut_examples() {
        let wt = edge_tree(2, 2, 1);
        let aug = augment(wt.tree()).unwrap();
        let minus_b = aug.minus_id("b").unwrap().to_string();
        let cut = StrongCut::new(aug.tree(), &["a", &minus_b]).unwrap();
        assert_eq!(cut_size(&cut), 3);

        let flow = make_flow(&wt).unwrap();
        assert_eq!(cut_value(&flow, &cut).unwrap(), flow.net_extent());

        // A lone vertex is both source and sink: no valid cut.
        let lone = Ditree::new(&["v"], &[], &[]).unwrap();
        assert!(matches!(
            StrongCut::new(&lone, &["v"]),
            Err(Error::InvalidCut(_))
        ));
        assert!(matches!(StrongCut::new(&lone, &[]), Err(Error::InvalidCut(_))));
        assert_eq!(max_cut_bruteforce(&lone).unwrap_err(), Error::NoValidCut);
    }

    #[test]
    fn bruteforce_cut_values() {
        let t = Ditree::new(&["a", "b"], &[("a", "b")], &[]).unwrap();
        assert_eq!(max_cut_bruteforce(&t).unwrap().0, 1);

        let t = Ditree::new(&["a", "v", "b"], &[("a", "v"), ("v", "b")], &[]).unwrap();
        let aug = augment(&t).unwrap();
        let (size, cut) = max_cut_bruteforce(aug.tree()).unwrap();
        assert_eq!(size, 4);
        assert_eq!(cut.size(), 4);
        assert_eq!(max_cut_dp(aug.tree()), Some(4));
    }

    #[test]
    fn dp_matches_bruteforce_on_samples() {
        let trees = [
            Ditree::new(&["a", "b"], &[("a", "b")], &[]).unwrap(),
            Ditree::new(&["a", "v", "b"], &[("a", "v"), ("v", "b")], &[]).unwrap(),
            Ditree::new(&["a", "v", "b"], &[("a", "v"), ("b", "v")], &[]).unwrap(),
            Ditree::new(
                &["c", "x", "y", "z"],
                &[("x", "c"), ("y", "c"), ("c", "z")],
                &[],
            )
            .unwrap(),
        ];
        for t in &trees {
            assert_eq!(Some(max_cut_bruteforce(t).unwrap().0), max_cut_dp(t));
        }
    }

    #[test]
    fn min_flow_max_cut_with_adjustment() {
        let wt = edge_tree(3, 3, 2);
        let cert = min_flow_max_cut(&wt).unwrap();
        assert_eq!(cert.bound, 3);
        assert_eq!(cert.adjustments, 1);
        assert_eq!(cert.extremal_labelling.vertex_labels(), &[2, 2]);
        assert_eq!(cert.extremal_labelling.edge_labels(), &[1]);
        assert_eq!(cert.witness_cut.size() as i64, cert.bound);
        assert_eq!(cert.witness_flow.net_extent(), cert.bound);

        let wt = edge_tree(2, 2, 1);
        let cert = min_flow_max_cut(&wt).unwrap();
        assert_eq!(cert.bound, 3);
        assert_eq!(cert.adjustments, 0);
    }

    #[test]
    fn lower_bound_modes() {
        let t = Ditree::new(&["a", "b"], &[("a", "b")], &[]).unwrap();
        assert_eq!(lower_bound(&t, BoundMode::AugmentedCut).unwrap(), 3);
        assert_eq!(lower_bound(&t, BoundMode::PaperFormula).unwrap(), 3);

        // The literal formula overcounts on a coherent interior vertex.
        let t = Ditree::new(&["a", "v", "b"], &[("a", "v"), ("v", "b")], &[]).unwrap();
        assert_eq!(lower_bound(&t, BoundMode::AugmentedCut).unwrap(), 4);
        assert_eq!(lower_bound(&t, BoundMode::PaperFormula).unwrap(), 5);

        let lone = Ditree::new(&["v"], &[], &[]).unwrap();
        assert_eq!(
            lower_bound(&lone, BoundMode::AugmentedCut).unwrap_err(),
            Error::NoValidCut
        );
    }

    #[test]
    fn synthesize_small() {
        let t = Ditree::new(&["a", "b"], &[("a", "b")], &[]).unwrap();
        let (wt, cert) = synthesize_equality_labelling(&t).unwrap();
        assert_eq!(wt.labels().vertex_labels(), &[2, 2]);
        assert_eq!(wt.labels().edge_labels(), &[1]);
        assert_eq!(cert.bound, 3);
        assert_eq!(net_extent(&wt), 3);

        let t = Ditree::new(&["a", "v", "b"], &[("a", "v"), ("v", "b")], &[]).unwrap();
        let (wt, cert) = synthesize_equality_labelling(&t).unwrap();
        assert_eq!(cert.bound, 4);
        assert_eq!(net_extent(&wt), 4);
        assert!(wt.is_positive() && wt.is_productless());
    }
}
