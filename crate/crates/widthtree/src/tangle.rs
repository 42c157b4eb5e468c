//! Trivialpods, combinatorial c-trivial tangle data, and decomposition
//! blueprints.
//!
//! A trivialpod records one side of a thick sphere: the thick label and the
//! labels of the thin spheres on that side. `realize` produces an explicit
//! even tangle for it (bridge, vertical, and ghost arc counts plus a
//! deterministic arc table) and `associate` recovers the pod from any such
//! data. `assemble` realizes both sides of every vertex of a width tree and
//! glues the resulting tangles into a blueprint whose arcs form a closed
//! 1-manifold; `knotify` composes gluings with transpositions until that
//! 1-manifold is connected.

use crate::error::{Error, Result};
use crate::tree::{validate, Ditree, LabelFunction, WidthTree};

/// Orientation of a trivialpod's edges relative to the thick vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PodOrientation {
    AllIn,
    AllOut,
}

/// Rooted star: a thick label and a list of thin labels, all at least -1,
/// with the thick label at least the sum of the nonnegative thin labels
/// (vacuous when no thin label is nonnegative).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trivialpod {
    thick_label: i64,
    thin_labels: Vec<i64>,
    orientation: PodOrientation,
}

impl Trivialpod {
    pub fn new(
        thick_label: i64,
        thin_labels: Vec<i64>,
        orientation: PodOrientation,
    ) -> Result<Trivialpod> {
        if thick_label < -1 {
            return Err(Error::LabelBelowMinusOne {
                item: "thick vertex".into(),
                label: thick_label,
            });
        }
        for (i, &l) in thin_labels.iter().enumerate() {
            if l < -1 {
                return Err(Error::LabelBelowMinusOne {
                    item: format!("thin vertex {i}"),
                    label: l,
                });
            }
        }
        let nonneg: i64 = thin_labels.iter().filter(|&&l| l >= 0).sum();
        let any_nonneg = thin_labels.iter().any(|&l| l >= 0);
        if any_nonneg && thick_label < nonneg {
            return Err(Error::InfeasiblePod(format!(
                "thick label {thick_label} below the nonnegative thin sum {nonneg}"
            )));
        }
        Ok(Trivialpod {
            thick_label,
            thin_labels,
            orientation,
        })
    }

    pub fn thick_label(&self) -> i64 {
        self.thick_label
    }

    pub fn thin_labels(&self) -> &[i64] {
        &self.thin_labels
    }

    pub fn orientation(&self) -> PodOrientation {
        self.orientation
    }
}

/// A sphere within one tangle: the positive boundary or the i-th negative
/// boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum TangleSphere {
    Positive,
    Negative(usize),
}

/// One puncture slot on a sphere of a tangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SlotRef {
    pub sphere: TangleSphere,
    pub slot: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArcKind {
    /// Both ends on the positive boundary.
    Bridge,
    /// One end positive, one end negative.
    Vertical,
    /// Both ends on negative boundaries.
    Ghost,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TangleArc {
    pub kind: ArcKind,
    pub ends: [SlotRef; 2],
}

/// Combinatorial data of one even c-trivial tangle: bridge arc count,
/// vertical arc counts per negative boundary, an acyclic ghost-arc graph,
/// and the explicit arc table over puncture slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CTrivialTangleData {
    bridge_arcs: usize,
    vertical_counts: Vec<usize>,
    ghost_edges: Vec<(usize, usize)>,
    arcs: Vec<TangleArc>,
}

impl CTrivialTangleData {
    /// Builds the canonical arc table: bridge arcs pair consecutive positive
    /// slots, then vertical arcs fill positive and negative slots in
    /// boundary order, then ghost arcs fill the remaining negative slots.
    pub fn new(
        bridge_arcs: usize,
        vertical_counts: Vec<usize>,
        ghost_edges: Vec<(usize, usize)>,
    ) -> Result<CTrivialTangleData> {
        let nb = vertical_counts.len();
        let mut ghost_degree = vec![0usize; nb];
        // Acyclicity via union-find; parallel edges and self-loops count as
        // cycles.
        let mut parent: Vec<usize> = (0..nb).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(x, y) in &ghost_edges {
            if x >= nb || y >= nb {
                return Err(Error::InfeasiblePod(format!(
                    "ghost edge ({x}, {y}) outside the {nb} negative boundaries"
                )));
            }
            ghost_degree[x] += 1;
            ghost_degree[y] += 1;
            let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
            if rx == ry {
                return Err(Error::InfeasiblePod("ghost arc graph contains a cycle".into()));
            }
            parent[rx] = ry;
        }
        for i in 0..nb {
            if (vertical_counts[i] + ghost_degree[i]) % 2 != 0 {
                return Err(Error::OddPositivePunctures);
            }
        }

        let mut arcs = Vec::new();
        let mut pos_next = 0usize;
        for _ in 0..bridge_arcs {
            arcs.push(TangleArc {
                kind: ArcKind::Bridge,
                ends: [
                    SlotRef {
                        sphere: TangleSphere::Positive,
                        slot: pos_next,
                    },
                    SlotRef {
                        sphere: TangleSphere::Positive,
                        slot: pos_next + 1,
                    },
                ],
            });
            pos_next += 2;
        }
        let mut neg_next = vec![0usize; nb];
        for (i, &count) in vertical_counts.iter().enumerate() {
            for _ in 0..count {
                arcs.push(TangleArc {
                    kind: ArcKind::Vertical,
                    ends: [
                        SlotRef {
                            sphere: TangleSphere::Positive,
                            slot: pos_next,
                        },
                        SlotRef {
                            sphere: TangleSphere::Negative(i),
                            slot: neg_next[i],
                        },
                    ],
                });
                pos_next += 1;
                neg_next[i] += 1;
            }
        }
        for &(x, y) in &ghost_edges {
            let ex = SlotRef {
                sphere: TangleSphere::Negative(x),
                slot: neg_next[x],
            };
            neg_next[x] += 1;
            let ey = SlotRef {
                sphere: TangleSphere::Negative(y),
                slot: neg_next[y],
            };
            neg_next[y] += 1;
            arcs.push(TangleArc {
                kind: ArcKind::Ghost,
                ends: [ex, ey],
            });
        }
        Ok(CTrivialTangleData {
            bridge_arcs,
            vertical_counts,
            ghost_edges,
            arcs,
        })
    }

    /// Rebuilds data from an explicit arc table, checking that every slot of
    /// every sphere is used exactly once and that arc kinds, vertical
    /// counts, and ghost edges are mutually consistent.
    pub fn from_table(
        bridge_arcs: usize,
        vertical_counts: Vec<usize>,
        ghost_edges: Vec<(usize, usize)>,
        arcs: Vec<TangleArc>,
    ) -> Result<CTrivialTangleData> {
        let reference =
            CTrivialTangleData::new(bridge_arcs, vertical_counts.clone(), ghost_edges.clone())?;
        let nb = vertical_counts.len();
        let pos_count = reference.positive_punctures();
        let mut pos_used = vec![false; pos_count];
        let mut neg_used: Vec<Vec<bool>> =
            (0..nb).map(|i| vec![false; reference.negative_punctures(i)]).collect();
        let mut bridge = 0;
        let mut vertical = vec![0usize; nb];
        let mut ghosts: Vec<(usize, usize)> = Vec::new();
        for arc in &arcs {
            for end in &arc.ends {
                match end.sphere {
                    TangleSphere::Positive => {
                        if end.slot >= pos_count || pos_used[end.slot] {
                            return Err(Error::InfeasiblePod(format!(
                                "positive slot {} reused or out of range",
                                end.slot
                            )));
                        }
                        pos_used[end.slot] = true;
                    }
                    TangleSphere::Negative(i) => {
                        if i >= nb || end.slot >= neg_used[i].len() || neg_used[i][end.slot] {
                            return Err(Error::InfeasiblePod(format!(
                                "negative slot {}:{} reused or out of range",
                                i, end.slot
                            )));
                        }
                        neg_used[i][end.slot] = true;
                    }
                }
            }
            match (arc.kind, arc.ends[0].sphere, arc.ends[1].sphere) {
                (ArcKind::Bridge, TangleSphere::Positive, TangleSphere::Positive) => bridge += 1,
                (ArcKind::Vertical, TangleSphere::Positive, TangleSphere::Negative(i))
                | (ArcKind::Vertical, TangleSphere::Negative(i), TangleSphere::Positive) => {
                    vertical[i] += 1
                }
                (ArcKind::Ghost, TangleSphere::Negative(x), TangleSphere::Negative(y)) => {
                    ghosts.push((x.min(y), x.max(y)))
                }
                _ => {
                    return Err(Error::InfeasiblePod(
                        "arc kind inconsistent with its endpoints".into(),
                    ))
                }
            }
        }
        if bridge != bridge_arcs || vertical != vertical_counts {
            return Err(Error::InfeasiblePod(
                "arc table counts disagree with the declared data".into(),
            ));
        }
        let mut declared: Vec<(usize, usize)> = ghost_edges
            .iter()
            .map(|&(x, y)| (x.min(y), x.max(y)))
            .collect();
        declared.sort_unstable();
        ghosts.sort_unstable();
        if declared != ghosts {
            return Err(Error::InfeasiblePod(
                "arc table ghosts disagree with the ghost graph".into(),
            ));
        }
        if pos_used.iter().any(|&u| !u) || neg_used.iter().any(|s| s.iter().any(|&u| !u)) {
            return Err(Error::InfeasiblePod("unused puncture slot".into()));
        }
        Ok(CTrivialTangleData {
            bridge_arcs,
            vertical_counts,
            ghost_edges,
            arcs,
        })
    }

    pub fn bridge_arcs(&self) -> usize {
        self.bridge_arcs
    }

    pub fn vertical_counts(&self) -> &[usize] {
        &self.vertical_counts
    }

    pub fn ghost_edges(&self) -> &[(usize, usize)] {
        &self.ghost_edges
    }

    pub fn arcs(&self) -> &[TangleArc] {
        &self.arcs
    }

    pub fn boundary_count(&self) -> usize {
        self.vertical_counts.len()
    }

    pub fn positive_punctures(&self) -> usize {
        2 * self.bridge_arcs + self.vertical_counts.iter().sum::<usize>()
    }

    pub fn negative_punctures(&self, i: usize) -> usize {
        let deg = self
            .ghost_edges
            .iter()
            .map(|&(x, y)| usize::from(x == i) + usize::from(y == i))
            .sum::<usize>();
        self.vertical_counts[i] + deg
    }
}

/// The trivialpod associated to tangle data: thick label
/// `-1 + b + (sum v_i)/2`, thin labels `-1 + (v_i + deg_i)/2`.
pub fn associate(data: &CTrivialTangleData, orientation: PodOrientation) -> Result<Trivialpod> {
    let pos = data.positive_punctures();
    if pos % 2 != 0 {
        return Err(Error::OddPositivePunctures);
    }
    let thick = pos as i64 / 2 - 1;
    let thins: Vec<i64> = (0..data.boundary_count())
        .map(|i| data.negative_punctures(i) as i64 / 2 - 1)
        .collect();
    Trivialpod::new(thick, thins, orientation)
}

/// One explicit even tangle realizing the pod: thin vertices labelled -1
/// become isolated unpunctured boundaries; the remaining thin vertices are
/// joined in a path (in input order) in the ghost graph, with
/// `v_i = 2 m_i + 2 - deg_i` vertical arcs each, and the bridge count takes
/// up the residual of the thick label. Inverse of `associate`.
pub fn realize(pod: &Trivialpod) -> Result<CTrivialTangleData> {
    let thins = pod.thin_labels();
    let nonneg: Vec<usize> = (0..thins.len()).filter(|&i| thins[i] >= 0).collect();
    let mut vertical = vec![0usize; thins.len()];
    let mut ghosts = Vec::new();
    for (k, &i) in nonneg.iter().enumerate() {
        let deg = if nonneg.len() == 1 {
            0
        } else if k == 0 || k == nonneg.len() - 1 {
            1
        } else {
            2
        };
        vertical[i] = (2 * thins[i] + 2) as usize - deg;
        if k + 1 < nonneg.len() {
            ghosts.push((i, nonneg[k + 1]));
        }
    }
    let bridge = if nonneg.is_empty() {
        pod.thick_label() + 1
    } else {
        pod.thick_label() - nonneg.iter().map(|&i| thins[i]).sum::<i64>()
    };
    if bridge < 0 {
        return Err(Error::InfeasiblePod(format!(
            "thick label {} cannot absorb the thin labels",
            pod.thick_label()
        )));
    }
    CTrivialTangleData::new(bridge as usize, vertical, ghosts)
}

/// Which side of a vertex a tangle fills.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TangleSide {
    /// The side of the incoming edges.
    In,
    /// The side of the outgoing edges.
    Out,
}

/// One realized tangle of a blueprint: the half-star of `vertex` on `side`,
/// with `boundary_edges[i]` the tree edge behind the i-th negative boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangleEntry {
    pub vertex: usize,
    pub side: TangleSide,
    pub data: CTrivialTangleData,
    pub boundary_edges: Vec<usize>,
}

/// A width tree realized as tangles and puncture gluings. Thick gluings
/// identify the positive boundaries of a vertex's two tangles; thin gluings
/// identify the negative boundaries across an internal edge. Edges at
/// boundary vertices stay unglued.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionBlueprint {
    width_tree: WidthTree,
    tangles: Vec<TangleEntry>,
    /// `(vertex, map)`: In-side positive slot `k` glues to Out-side slot
    /// `map[k]`.
    thick_gluings: Vec<(usize, Vec<usize>)>,
    /// `(edge, map)`: tail-side slot `k` glues to head-side slot `map[k]`.
    thin_gluings: Vec<(usize, Vec<usize>)>,
    unglued_edges: Vec<usize>,
}

impl DecompositionBlueprint {
    pub fn width_tree(&self) -> &WidthTree {
        &self.width_tree
    }

    pub fn tangles(&self) -> &[TangleEntry] {
        &self.tangles
    }

    pub fn thick_gluings(&self) -> &[(usize, Vec<usize>)] {
        &self.thick_gluings
    }

    pub fn thin_gluings(&self) -> &[(usize, Vec<usize>)] {
        &self.thin_gluings
    }

    pub fn unglued_edges(&self) -> &[usize] {
        &self.unglued_edges
    }

    pub fn ghost_arc_count(&self) -> usize {
        self.tangles.iter().map(|t| t.data.ghost_edges().len()).sum()
    }

    pub(crate) fn from_parts(
        width_tree: WidthTree,
        tangles: Vec<TangleEntry>,
        thick_gluings: Vec<(usize, Vec<usize>)>,
        thin_gluings: Vec<(usize, Vec<usize>)>,
        unglued_edges: Vec<usize>,
    ) -> DecompositionBlueprint {
        DecompositionBlueprint {
            width_tree,
            tangles,
            thick_gluings,
            thin_gluings,
            unglued_edges,
        }
    }

    fn entry_index(&self, vertex: usize, side: TangleSide) -> Option<usize> {
        self.tangles
            .iter()
            .position(|t| t.vertex == vertex && t.side == side)
    }

    /// Reconstructs the width tree from puncture counts and gluing
    /// structure alone (labels are `punctures / 2 - 1`, orientations follow
    /// the side each thin sphere lies on).
    pub fn derive_width_tree(&self) -> Result<WidthTree> {
        let base = self.width_tree.tree();
        let mut ids = Vec::new();
        let mut vlabels = Vec::new();
        let mut boundary = Vec::new();
        for v in 0..base.vertex_count() {
            if base.is_boundary(v) {
                continue;
            }
            let entry = self
                .entry_index(v, TangleSide::In)
                .ok_or_else(|| Error::InternalError("missing In tangle".into()))?;
            let p = self.tangles[entry].data.positive_punctures() as i64;
            ids.push(base.id(v).to_string());
            vlabels.push(p / 2 - 1);
        }
        let mut edges = Vec::new();
        let mut elabels = Vec::new();
        for &(e, _) in &self.thin_gluings {
            let (t, h) = base.edges()[e];
            let entry = self
                .tangles
                .iter()
                .find(|x| x.vertex == t && x.side == TangleSide::Out)
                .ok_or_else(|| Error::InternalError("missing Out tangle".into()))?;
            let i = entry
                .boundary_edges
                .iter()
                .position(|&x| x == e)
                .ok_or_else(|| Error::InternalError("edge missing from tangle".into()))?;
            let p = entry.data.negative_punctures(i) as i64;
            edges.push((base.id(t).to_string(), base.id(h).to_string()));
            elabels.push(p / 2 - 1);
        }
        for &e in &self.unglued_edges {
            let (t, h) = base.edges()[e];
            // Exactly one endpoint is a boundary vertex; the sphere hangs off
            // the other one.
            let (inner, side) = if base.is_boundary(h) {
                (t, TangleSide::Out)
            } else {
                (h, TangleSide::In)
            };
            let entry = self
                .tangles
                .iter()
                .find(|x| x.vertex == inner && x.side == side)
                .ok_or_else(|| Error::InternalError("missing tangle at unglued edge".into()))?;
            let i = entry
                .boundary_edges
                .iter()
                .position(|&x| x == e)
                .ok_or_else(|| Error::InternalError("edge missing from tangle".into()))?;
            let label = entry.data.negative_punctures(i) as i64 / 2 - 1;
            let bvertex = if inner == t { h } else { t };
            ids.push(base.id(bvertex).to_string());
            vlabels.push(label);
            boundary.push(base.id(bvertex).to_string());
            edges.push((base.id(t).to_string(), base.id(h).to_string()));
            elabels.push(label);
        }
        let tree = Ditree::from_parts(ids, edges, boundary)?;
        let lambda = LabelFunction::from_vecs(&tree, vlabels, elabels)?;
        Ok(validate(tree, lambda)?.with_delta(self.width_tree.delta()))
    }
}

/// Realizes each nonboundary vertex's two half-stars as tangles and glues
/// them with identity slot bijections. Boundary-vertex edges stay unglued.
pub fn assemble(wt: &WidthTree) -> Result<DecompositionBlueprint> {
    let tree = wt.tree();
    let mut tangles = Vec::new();
    let mut thick_gluings = Vec::new();
    for v in 0..tree.vertex_count() {
        if tree.is_boundary(v) {
            continue;
        }
        for (side, edge_list) in [
            (TangleSide::In, tree.incoming_edges(v)),
            (TangleSide::Out, tree.outgoing_edges(v)),
        ] {
            let thins: Vec<i64> = edge_list.iter().map(|&e| wt.edge_label(e)).collect();
            let orientation = match side {
                TangleSide::In => PodOrientation::AllIn,
                TangleSide::Out => PodOrientation::AllOut,
            };
            let pod = Trivialpod::new(wt.vertex_label(v), thins, orientation)?;
            let data = realize(&pod)?;
            debug_assert_eq!(
                data.positive_punctures() as i64,
                2 * wt.vertex_label(v) + 2
            );
            tangles.push(TangleEntry {
                vertex: v,
                side,
                data,
                boundary_edges: edge_list.to_vec(),
            });
        }
        let punctures = (2 * wt.vertex_label(v) + 2) as usize;
        thick_gluings.push((v, (0..punctures).collect()));
    }
    let mut thin_gluings = Vec::new();
    let mut unglued = Vec::new();
    for (e, &(t, h)) in tree.edges().iter().enumerate() {
        if tree.is_boundary(t) || tree.is_boundary(h) {
            unglued.push(e);
            continue;
        }
        let punctures = (2 * wt.edge_label(e) + 2) as usize;
        thin_gluings.push((e, (0..punctures).collect()));
    }
    Ok(DecompositionBlueprint::from_parts(
        wt.clone(),
        tangles,
        thick_gluings,
        thin_gluings,
        unglued,
    ))
}

/// Flat slot indexing across every sphere side of every tangle.
struct SlotSpace {
    /// Per tangle entry: offset of the positive slots, then per negative
    /// boundary the offset of its slots.
    pos_offset: Vec<usize>,
    neg_offset: Vec<Vec<usize>>,
    total: usize,
}

impl SlotSpace {
    fn build(bp: &DecompositionBlueprint) -> SlotSpace {
        let mut pos_offset = Vec::with_capacity(bp.tangles.len());
        let mut neg_offset = Vec::with_capacity(bp.tangles.len());
        let mut total = 0;
        for entry in &bp.tangles {
            pos_offset.push(total);
            total += entry.data.positive_punctures();
            let mut per = Vec::with_capacity(entry.data.boundary_count());
            for i in 0..entry.data.boundary_count() {
                per.push(total);
                total += entry.data.negative_punctures(i);
            }
            neg_offset.push(per);
        }
        SlotSpace {
            pos_offset,
            neg_offset,
            total,
        }
    }

    fn global(&self, entry: usize, slot: SlotRef) -> usize {
        match slot.sphere {
            TangleSphere::Positive => self.pos_offset[entry] + slot.slot,
            TangleSphere::Negative(i) => self.neg_offset[entry][i] + slot.slot,
        }
    }
}

/// Number of circles in the union of all arcs under the gluings.
pub fn count_components(bp: &DecompositionBlueprint) -> Result<usize> {
    let (count, _) = trace_components(bp)?;
    Ok(count)
}

/// Traces the closed 1-manifold; returns the component count and a component
/// id per global slot.
fn trace_components(bp: &DecompositionBlueprint) -> Result<(usize, Vec<usize>)> {
    if !bp.unglued_edges.is_empty() {
        return Err(Error::OpenBoundary);
    }
    let space = SlotSpace::build(bp);
    let mut arc_partner = vec![usize::MAX; space.total];
    for (t, entry) in bp.tangles.iter().enumerate() {
        for arc in entry.data.arcs() {
            let a = space.global(t, arc.ends[0]);
            let b = space.global(t, arc.ends[1]);
            arc_partner[a] = b;
            arc_partner[b] = a;
        }
    }
    let mut glue_partner = vec![usize::MAX; space.total];
    for (v, map) in &bp.thick_gluings {
        let in_entry = bp
            .entry_index(*v, TangleSide::In)
            .ok_or_else(|| Error::InternalError("missing In tangle".into()))?;
        let out_entry = bp
            .entry_index(*v, TangleSide::Out)
            .ok_or_else(|| Error::InternalError("missing Out tangle".into()))?;
        for (k, &k2) in map.iter().enumerate() {
            let a = space.global(
                in_entry,
                SlotRef {
                    sphere: TangleSphere::Positive,
                    slot: k,
                },
            );
            let b = space.global(
                out_entry,
                SlotRef {
                    sphere: TangleSphere::Positive,
                    slot: k2,
                },
            );
            glue_partner[a] = b;
            glue_partner[b] = a;
        }
    }
    let base = bp.width_tree.tree();
    for (e, map) in &bp.thin_gluings {
        let (t, h) = base.edges()[*e];
        let tail_entry = bp
            .entry_index(t, TangleSide::Out)
            .ok_or_else(|| Error::InternalError("missing Out tangle".into()))?;
        let head_entry = bp
            .entry_index(h, TangleSide::In)
            .ok_or_else(|| Error::InternalError("missing In tangle".into()))?;
        let ti = bp.tangles[tail_entry]
            .boundary_edges
            .iter()
            .position(|&x| x == *e)
            .ok_or_else(|| Error::InternalError("edge missing from tail tangle".into()))?;
        let hi = bp.tangles[head_entry]
            .boundary_edges
            .iter()
            .position(|&x| x == *e)
            .ok_or_else(|| Error::InternalError("edge missing from head tangle".into()))?;
        for (k, &k2) in map.iter().enumerate() {
            let a = space.global(
                tail_entry,
                SlotRef {
                    sphere: TangleSphere::Negative(ti),
                    slot: k,
                },
            );
            let b = space.global(
                head_entry,
                SlotRef {
                    sphere: TangleSphere::Negative(hi),
                    slot: k2,
                },
            );
            glue_partner[a] = b;
            glue_partner[b] = a;
        }
    }
    if arc_partner.iter().any(|&p| p == usize::MAX)
        || glue_partner.iter().any(|&p| p == usize::MAX)
    {
        return Err(Error::InternalError("slot without both partners".into()));
    }

    let mut component = vec![usize::MAX; space.total];
    let mut count = 0;
    for start in 0..space.total {
        if component[start] != usize::MAX {
            continue;
        }
        let mut at = start;
        loop {
            component[at] = count;
            let via_arc = arc_partner[at];
            component[via_arc] = count;
            at = glue_partner[via_arc];
            if at == start {
                break;
            }
        }
        count += 1;
    }
    Ok((count, component))
}

/// Greedily composes gluings with transpositions of two slots on distinct
/// components until the realized 1-manifold is connected. Requires a closed
/// blueprint with nonnegative labels.
pub fn knotify(bp: &DecompositionBlueprint) -> Result<DecompositionBlueprint> {
    let wt = &bp.width_tree;
    for v in 0..wt.tree().vertex_count() {
        if wt.vertex_label(v) < 0 {
            return Err(Error::LabelTooSmall {
                item: format!("vertex {}", wt.tree().id(v)),
                label: wt.vertex_label(v),
                min: 0,
            });
        }
    }
    let mut current = bp.clone();
    loop {
        let (count, component) = trace_components(&current)?;
        if count == 1 {
            return Ok(current);
        }
        let space = SlotSpace::build(&current);
        let mut swapped = false;
        // Thick spheres first, then thin, in index order; swap the first
        // cross-component slot pair found.
        for g in 0..current.thick_gluings.len() {
            let (v, _) = current.thick_gluings[g];
            let entry = current.entry_index(v, TangleSide::In).unwrap();
            if let Some((s1, s2)) = cross_component_pair(
                &current.thick_gluings[g].1,
                |k| {
                    component[space.global(
                        entry,
                        SlotRef {
                            sphere: TangleSphere::Positive,
                            slot: k,
                        },
                    )]
                },
            ) {
                current.thick_gluings[g].1.swap(s1, s2);
                swapped = true;
                break;
            }
        }
        if !swapped {
            for g in 0..current.thin_gluings.len() {
                let (e, _) = current.thin_gluings[g];
                let (t, _) = current.width_tree.tree().edges()[e];
                let entry = current.entry_index(t, TangleSide::Out).unwrap();
                let ti = current.tangles[entry]
                    .boundary_edges
                    .iter()
                    .position(|&x| x == e)
                    .unwrap();
                if let Some((s1, s2)) = cross_component_pair(
                    &current.thin_gluings[g].1,
                    |k| {
                        component[space.global(
                            entry,
                            SlotRef {
                                sphere: TangleSphere::Negative(ti),
                                slot: k,
                            },
                        )]
                    },
                ) {
                    current.thin_gluings[g].1.swap(s1, s2);
                    swapped = true;
                    break;
                }
            }
        }
        if !swapped {
            return Err(Error::Stuck);
        }
        debug_assert_eq!(trace_components(&current).unwrap().0, count - 1);
    }
}

/// First pair of domain slots on distinct components, lexicographically.
fn cross_component_pair(map: &[usize], comp_of: impl Fn(usize) -> usize) -> Option<(usize, usize)> {
    if map.is_empty() {
        return None;
    }
    let first = comp_of(0);
    (1..map.len()).find(|&k| comp_of(k) != first).map(|k| (0, k))
}
