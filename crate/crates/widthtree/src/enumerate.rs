//! Exhaustive enumeration of small width trees up to equivalence, plus the
//! brute-force oracles and random generators behind the test suites.
//!
//! Generation is free trees x orientations x boundary subsets x labellings.
//! Duplicates are removed exactly, without materializing anything: a labelled
//! tree is emitted only when it is the lexicographic minimum of its orbit
//! under the shape's automorphism group combined with global reversal.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::tree::{validate, Ditree, LabelFunction, WidthTree};

const MAX_VERTICES: usize = 8;
const MAX_LABEL: i64 = 6;

/// Predicates restricting the enumerated family.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Require {
    pub positive: bool,
    pub productless: bool,
    pub nonnegative: bool,
    pub boundaryless: bool,
    pub coherent_path: bool,
}

/// What to enumerate: all width trees with at most `max_vertices` vertices
/// and labels in `[-1, max_label]` (floor raised by predicates), meeting
/// every predicate in `require`, each exactly once up to equivalence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub max_vertices: usize,
    pub max_label: i64,
    pub require: Require,
}

impl EnumerationSpec {
    pub fn new(max_vertices: usize, max_label: i64) -> EnumerationSpec {
        EnumerationSpec {
            max_vertices,
            max_label,
            require: Require::default(),
        }
    }

    pub fn with(mut self, f: impl FnOnce(&mut Require)) -> EnumerationSpec {
        f(&mut self.require);
        self
    }

    fn check_guards(&self) -> Result<()> {
        if self.max_vertices == 0 || self.max_vertices > MAX_VERTICES {
            return Err(Error::GuardExceeded(format!(
                "max_vertices {} outside 1..={MAX_VERTICES}",
                self.max_vertices
            )));
        }
        if self.max_label > MAX_LABEL || self.max_label < -1 {
            return Err(Error::GuardExceeded(format!(
                "max_label {} outside -1..={MAX_LABEL}",
                self.max_label
            )));
        }
        Ok(())
    }
}

/// An unlabelled undirected tree shape on vertices `0..n`, together with its
/// automorphism group.
struct Shape {
    n: usize,
    /// Edges as (a, b) with a < b, sorted.
    edges: Vec<(usize, usize)>,
    aut: Vec<Vec<usize>>,
}

fn prufer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let l = (0..n).find(|&v| degree[v] == 1).expect("a leaf always remains");
        edges.push((l.min(s), l.max(s)));
        degree[l] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    debug_assert_eq!(rest.len(), 2);
    edges.push((rest[0].min(rest[1]), rest[0].max(rest[1])));
    edges
}

/// Canonical code of an unlabelled undirected tree (center-rooted AHU).
fn shape_code(n: usize, edges: &[(usize, usize)]) -> Vec<u8> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    // Centers by leaf stripping.
    let centers = {
        let mut degree: Vec<usize> = adj.iter().map(|l| l.len()).collect();
        let mut removed = vec![false; n];
        let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
        let mut remaining = n;
        while remaining > 2 {
            let mut next = Vec::new();
            for &v in &layer {
                if removed[v] {
                    continue;
                }
                removed[v] = true;
                remaining -= 1;
                for &u in &adj[v] {
                    if !removed[u] {
                        degree[u] -= 1;
                        if degree[u] == 1 {
                            next.push(u);
                        }
                    }
                }
            }
            layer = next;
        }
        (0..n).filter(|&v| !removed[v]).collect::<Vec<_>>()
    };
    fn encode(v: usize, parent: usize, adj: &[Vec<usize>], out: &mut Vec<u8>) {
        let mut children: Vec<Vec<u8>> = Vec::new();
        for &u in &adj[v] {
            if u != parent {
                let mut c = Vec::new();
                encode(u, v, adj, &mut c);
                children.push(c);
            }
        }
        children.sort();
        out.push(b'(');
        for c in children {
            out.extend_from_slice(&c);
        }
        out.push(b')');
    }
    centers
        .into_iter()
        .map(|c| {
            let mut buf = Vec::new();
            encode(c, usize::MAX, &adj, &mut buf);
            buf
        })
        .min()
        .expect("nonempty tree")
}

fn automorphisms(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let edge_set: std::collections::HashSet<(usize, usize)> = edges.iter().copied().collect();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    // Lexicographic run over all permutations; tree sizes here are <= 8.
    loop {
        if edges
            .iter()
            .all(|&(a, b)| edge_set.contains(&(perm[a].min(perm[b]), perm[a].max(perm[b]))))
        {
            out.push(perm.clone());
        }
        let mut i = n.wrapping_sub(2);
        while i != usize::MAX && perm[i] >= perm[i + 1] {
            i = i.wrapping_sub(1);
        }
        if i == usize::MAX {
            break;
        }
        let mut j = n - 1;
        while perm[j] <= perm[i] {
            j -= 1;
        }
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    out
}

/// All free trees on exactly `n` vertices, one representative per
/// isomorphism class.
fn free_trees(n: usize) -> Vec<Shape> {
    let mut reps: Vec<(Vec<u8>, Vec<(usize, usize)>)> = Vec::new();
    if n == 1 {
        reps.push((Vec::new(), Vec::new()));
    } else if n == 2 {
        reps.push((Vec::new(), vec![(0, 1)]));
    } else {
        let mut seen = std::collections::HashSet::new();
        let mut seq = vec![0usize; n - 2];
        loop {
            let edges = prufer_decode(n, &seq);
            let code = shape_code(n, &edges);
            if seen.insert(code.clone()) {
                reps.push((code, edges));
            }
            let mut p = 0;
            loop {
                seq[p] += 1;
                if seq[p] < n {
                    break;
                }
                seq[p] = 0;
                p += 1;
                if p == n - 2 {
                    break;
                }
            }
            if p == n - 2 {
                break;
            }
        }
        reps.sort();
    }
    reps.into_iter()
        .map(|(_, mut edges)| {
            edges.sort();
            let aut = automorphisms(n, &edges);
            Shape { n, edges, aut }
        })
        .collect()
}

/// A skeleton is a shape plus an orientation bit per edge (true: low
/// endpoint is the tail) and a boundary flag per vertex.
struct SkeletonAction {
    /// vertex image under the automorphism
    vmap: Vec<usize>,
    /// edge k maps to edge `emap[k].0`, with endpoint order swapped when
    /// `emap[k].1`
    emap: Vec<(usize, bool)>,
    /// whether this action additionally reverses all orientations
    reverse: bool,
}

fn actions(shape: &Shape) -> Vec<SkeletonAction> {
    let mut edge_lookup = std::collections::HashMap::new();
    for (k, &(a, b)) in shape.edges.iter().enumerate() {
        edge_lookup.insert((a, b), k);
    }
    let mut out = Vec::new();
    for g in &shape.aut {
        let emap: Vec<(usize, bool)> = shape
            .edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (g[a], g[b]);
                if x < y {
                    (edge_lookup[&(x, y)], false)
                } else {
                    (edge_lookup[&(y, x)], true)
                }
            })
            .collect();
        for reverse in [false, true] {
            out.push(SkeletonAction {
                vmap: g.clone(),
                emap: emap.clone(),
                reverse,
            });
        }
    }
    out
}

fn apply_skeleton(
    action: &SkeletonAction,
    orient: &[bool],
    boundary: &[bool],
) -> (Vec<bool>, Vec<bool>) {
    let mut o2 = vec![false; orient.len()];
    for (k, &(k2, swapped)) in action.emap.iter().enumerate() {
        let mut bit = orient[k] ^ swapped;
        if action.reverse {
            bit = !bit;
        }
        o2[k2] = bit;
    }
    let mut b2 = vec![false; boundary.len()];
    for (v, &flag) in boundary.iter().enumerate() {
        b2[action.vmap[v]] = flag;
    }
    (o2, b2)
}

struct LabelAction {
    /// vlabels of the transformed tree at index j come from `vinv[j]`
    vinv: Vec<usize>,
    einv: Vec<usize>,
}

/// Streams every width tree matching `spec` (exactly once up to
/// equivalence, deterministic order) to `visit`.
pub fn enumerate_with(spec: &EnumerationSpec, mut visit: impl FnMut(&WidthTree)) -> Result<()> {
    spec.check_guards()?;
    let edge_lo: i64 = if spec.require.positive {
        1
    } else if spec.require.nonnegative {
        0
    } else {
        -1
    };
    let vertex_lo = edge_lo;
    for n in 1..=spec.max_vertices {
        for shape in free_trees(n) {
            enumerate_shape(spec, &shape, edge_lo, vertex_lo, &mut visit)?;
        }
    }
    Ok(())
}

fn enumerate_shape(
    spec: &EnumerationSpec,
    shape: &Shape,
    edge_lo: i64,
    vertex_lo: i64,
    visit: &mut impl FnMut(&WidthTree),
) -> Result<()> {
    let n = shape.n;
    let m = shape.edges.len();
    let acts = actions(shape);
    let mut degree = vec![0usize; n];
    for &(a, b) in &shape.edges {
        degree[a] += 1;
        degree[b] += 1;
    }
    let leaf_list: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    if spec.require.coherent_path && n > 1 && degree.iter().any(|&d| d > 2) {
        return Ok(());
    }

    let ids: Vec<String> = (0..n).map(|v| format!("v{v}")).collect();

    for omask in 0u32..(1 << m) {
        let orient: Vec<bool> = (0..m).map(|k| omask & (1 << k) != 0).collect();
        if spec.require.coherent_path && !coherent_orientation(n, &shape.edges, &orient) {
            continue;
        }
        let boundary_masks: u32 = if spec.require.boundaryless {
            1
        } else {
            1 << leaf_list.len()
        };
        'bmask: for bmask in 0u32..boundary_masks {
            let mut boundary = vec![false; n];
            for (i, &v) in leaf_list.iter().enumerate() {
                if bmask & (1 << i) != 0 {
                    boundary[v] = true;
                }
            }
            // Keep only the lexicographically least skeleton in its orbit;
            // remember the stabilizer for per-labelling checks.
            let mut stabilizer: Vec<LabelAction> = Vec::new();
            for act in &acts {
                let (o2, b2) = apply_skeleton(act, &orient, &boundary);
                match (o2.as_slice(), b2.as_slice()).cmp(&(orient.as_slice(), boundary.as_slice()))
                {
                    std::cmp::Ordering::Less => continue 'bmask,
                    std::cmp::Ordering::Equal => {
                        let mut vinv = vec![0usize; n];
                        for v in 0..n {
                            vinv[act.vmap[v]] = v;
                        }
                        let mut einv = vec![0usize; m];
                        for k in 0..m {
                            einv[act.emap[k].0] = k;
                        }
                        // Skip the identity.
                        if vinv.iter().enumerate().all(|(i, &x)| i == x) && !act.reverse {
                            continue;
                        }
                        stabilizer.push(LabelAction { vinv, einv });
                    }
                    std::cmp::Ordering::Greater => {}
                }
            }
            emit_labellings(
                spec, shape, &ids, &orient, &boundary, &stabilizer, edge_lo, vertex_lo, visit,
            )?;
        }
    }
    Ok(())
}

fn coherent_orientation(n: usize, edges: &[(usize, usize)], orient: &[bool]) -> bool {
    if n == 1 {
        return true;
    }
    let mut indeg = vec![0usize; n];
    let mut outdeg = vec![0usize; n];
    for (k, &(a, b)) in edges.iter().enumerate() {
        let (t, h) = if orient[k] { (a, b) } else { (b, a) };
        outdeg[t] += 1;
        indeg[h] += 1;
    }
    (0..n).all(|v| indeg[v] + outdeg[v] != 2 || (indeg[v] == 1 && outdeg[v] == 1))
}

#[allow(clippy::too_many_arguments)]
fn emit_labellings(
    spec: &EnumerationSpec,
    shape: &Shape,
    ids: &[String],
    orient: &[bool],
    boundary: &[bool],
    stabilizer: &[LabelAction],
    edge_lo: i64,
    vertex_lo: i64,
    visit: &mut impl FnMut(&WidthTree),
) -> Result<()> {
    let n = shape.n;
    let m = shape.edges.len();
    let hi = spec.max_label;
    if hi < edge_lo && m > 0 {
        return Ok(());
    }

    let directed: Vec<(usize, usize)> = shape
        .edges
        .iter()
        .zip(orient)
        .map(|(&(a, b), &bit)| if bit { (a, b) } else { (b, a) })
        .collect();
    let mut incoming = vec![Vec::new(); n];
    let mut outgoing = vec![Vec::new(); n];
    for (k, &(t, h)) in directed.iter().enumerate() {
        outgoing[t].push(k);
        incoming[h].push(k);
    }

    // The buffer tree is built lazily on the first emission and mutated in
    // place afterwards; ids, edges, and boundary stay fixed per skeleton.
    let mut buffer: Option<WidthTree> = None;

    let mut elabels = vec![edge_lo; m];
    let mut vchoices: Vec<Vec<i64>> = vec![Vec::new(); n];
    loop {
        // Per-vertex choice lists for the current edge labelling.
        let mut feasible = true;
        for v in 0..n {
            let list = &mut vchoices[v];
            list.clear();
            if boundary[v] {
                let e = incoming[v].first().or(outgoing[v].first()).copied().unwrap();
                let forced = elabels[e];
                if forced >= vertex_lo {
                    list.push(forced);
                }
            } else {
                let mut lo = vertex_lo;
                for side in [&incoming[v], &outgoing[v]] {
                    let mut sum = 0;
                    let mut any = false;
                    for &e in side.iter() {
                        if elabels[e] >= 0 {
                            sum += elabels[e];
                            any = true;
                        }
                    }
                    if any {
                        lo = lo.max(sum);
                    }
                }
                let mut forbidden: [Option<i64>; 2] = [None, None];
                if spec.require.productless {
                    if incoming[v].len() == 1 {
                        forbidden[0] = Some(elabels[incoming[v][0]]);
                    }
                    if outgoing[v].len() == 1 {
                        forbidden[1] = Some(elabels[outgoing[v][0]]);
                    }
                }
                for val in lo..=hi {
                    if forbidden[0] != Some(val) && forbidden[1] != Some(val) {
                        list.push(val);
                    }
                }
            }
            if list.is_empty() {
                feasible = false;
                break;
            }
        }

        if feasible {
            let mut idx = vec![0usize; n];
            let mut vlabels: Vec<i64> = (0..n).map(|v| vchoices[v][0]).collect();
            loop {
                if orbit_minimal(&vlabels, &elabels, stabilizer) {
                    match &mut buffer {
                        Some(wt) => {
                            let (_, lambda) = wt.parts_mut();
                            for v in 0..n {
                                lambda.set_vertex_label(v, vlabels[v]);
                            }
                            for e in 0..m {
                                lambda.set_edge_label(e, elabels[e]);
                            }
                        }
                        None => {
                            let tree = Ditree::from_parts(
                                ids.to_vec(),
                                directed
                                    .iter()
                                    .map(|&(t, h)| (ids[t].clone(), ids[h].clone()))
                                    .collect(),
                                (0..n)
                                    .filter(|&v| boundary[v])
                                    .map(|v| ids[v].clone())
                                    .collect(),
                            )?;
                            let lambda =
                                LabelFunction::from_vecs(&tree, vlabels.clone(), elabels.clone())?;
                            buffer = Some(validate(tree, lambda)?);
                        }
                    }
                    // Validity holds by construction of the choice lists;
                    // the first emission went through validate above.
                    visit(buffer.as_ref().unwrap());
                }
                // Advance the vertex-label odometer.
                let mut p = 0;
                loop {
                    idx[p] += 1;
                    if idx[p] < vchoices[p].len() {
                        vlabels[p] = vchoices[p][idx[p]];
                        break;
                    }
                    idx[p] = 0;
                    vlabels[p] = vchoices[p][0];
                    p += 1;
                    if p == n {
                        break;
                    }
                }
                if p == n {
                    break;
                }
            }
        }

        // Advance the edge-label odometer.
        if m == 0 {
            break;
        }
        let mut p = 0;
        loop {
            elabels[p] += 1;
            if elabels[p] <= hi {
                break;
            }
            elabels[p] = edge_lo;
            p += 1;
            if p == m {
                break;
            }
        }
        if p == m {
            break;
        }
    }
    Ok(())
}

fn orbit_minimal(vlabels: &[i64], elabels: &[i64], stabilizer: &[LabelAction]) -> bool {
    'outer: for act in stabilizer {
        for j in 0..vlabels.len() {
            let t = vlabels[act.vinv[j]];
            let o = vlabels[j];
            if t < o {
                return false;
            }
            if t > o {
                continue 'outer;
            }
        }
        for j in 0..elabels.len() {
            let t = elabels[act.einv[j]];
            let o = elabels[j];
            if t < o {
                return false;
            }
            if t > o {
                continue 'outer;
            }
        }
    }
    true
}

/// Materialized enumeration, sorted by canonical form.
pub fn enumerate(spec: &EnumerationSpec) -> Result<Vec<WidthTree>> {
    let mut out = Vec::new();
    enumerate_with(spec, |wt| out.push(wt.clone()))?;
    out.sort_by_cached_key(|wt| wt.canonical_form());
    Ok(out)
}

/// All ditrees with at most `max_vertices` vertices, one per equivalence
/// class (isomorphism up to global reversal).
pub fn enumerate_ditrees(max_vertices: usize) -> Result<Vec<Ditree>> {
    if max_vertices == 0 || max_vertices > MAX_VERTICES {
        return Err(Error::GuardExceeded(format!(
            "max_vertices {max_vertices} outside 1..={MAX_VERTICES}"
        )));
    }
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        for shape in free_trees(n) {
            let acts = actions(&shape);
            let m = shape.edges.len();
            let ids: Vec<String> = (0..n).map(|v| format!("v{v}")).collect();
            let boundary = vec![false; n];
            'omask: for omask in 0u32..(1 << m) {
                let orient: Vec<bool> = (0..m).map(|k| omask & (1 << k) != 0).collect();
                for act in &acts {
                    let (o2, _) = apply_skeleton(act, &orient, &boundary);
                    if o2 < orient {
                        continue 'omask;
                    }
                }
                let edges = shape
                    .edges
                    .iter()
                    .zip(&orient)
                    .map(|(&(a, b), &bit)| {
                        let (t, h) = if bit { (a, b) } else { (b, a) };
                        (ids[t].clone(), ids[h].clone())
                    })
                    .collect();
                out.push(Ditree::from_parts(ids.clone(), edges, Vec::new())?);
            }
        }
    }
    Ok(out)
}

/// Exact minimum net extent over positive productless labellings with edge
/// labels in `[1, cap]`; vertex labels are forced to their minimal feasible
/// values, which is optimal since the conditions decouple per vertex.
pub fn min_net_extent_bruteforce(tree: &Ditree, cap: i64) -> Result<i64> {
    if cap < 1 {
        return Err(Error::GuardExceeded(format!("cap {cap} below 1")));
    }
    let m = tree.edge_count();
    if m > 10 || cap > 9 {
        return Err(Error::GuardExceeded(format!(
            "search space {cap}^{m} too large"
        )));
    }
    let n = tree.vertex_count();
    let mut elabels = vec![1i64; m];
    let mut best: Option<i64> = None;
    loop {
        let mut total = -elabels.iter().sum::<i64>();
        let mut feasible = true;
        for v in 0..n {
            let in_sum: i64 = tree.incoming_edges(v).iter().map(|&e| elabels[e]).sum();
            let out_sum: i64 = tree.outgoing_edges(v).iter().map(|&e| elabels[e]).sum();
            let mut val = 1i64.max(in_sum).max(out_sum);
            if tree.is_boundary(v) {
                let e = tree
                    .incoming_edges(v)
                    .first()
                    .or(tree.outgoing_edges(v).first())
                    .copied()
                    .unwrap();
                val = elabels[e];
            } else {
                // Bump off any value that would create a product edge.
                loop {
                    let sole_in = tree.in_degree(v) == 1 && elabels[tree.incoming_edges(v)[0]] == val;
                    let sole_out =
                        tree.out_degree(v) == 1 && elabels[tree.outgoing_edges(v)[0]] == val;
                    if sole_in || sole_out {
                        val += 1;
                    } else {
                        break;
                    }
                }
            }
            if val > cap {
                feasible = false;
                break;
            }
            total += val;
        }
        if feasible {
            best = Some(best.map_or(total, |b: i64| b.min(total)));
        }
        if m == 0 {
            break;
        }
        let mut p = 0;
        loop {
            elabels[p] += 1;
            if elabels[p] <= cap {
                break;
            }
            elabels[p] = 1;
            p += 1;
            if p == m {
                break;
            }
        }
        if p == m {
            break;
        }
    }
    best.ok_or_else(|| Error::GuardExceeded("cap admits no feasible labelling".into()))
}

/// Uniformly-shaped random valid width tree with at most `max_vertices`
/// vertices and labels in `[-1, max_label]`. Deterministic for a fixed rng.
pub fn random_width_tree(rng: &mut impl Rng, max_vertices: usize, max_label: i64) -> WidthTree {
    assert!(max_vertices >= 1 && max_label >= 1);
    loop {
        let n = rng.gen_range(1..=max_vertices);
        let mut edges: Vec<(usize, usize)> = Vec::new();
        if n == 2 {
            edges.push((0, 1));
        } else if n > 2 {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            edges = prufer_decode(n, &seq);
        }
        // Random orientation.
        let directed: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(a, b)| if rng.gen() { (a, b) } else { (b, a) })
            .collect();
        // Small-biased edge labels: min of two uniform draws.
        let elabels: Vec<i64> = directed
            .iter()
            .map(|_| {
                let a = rng.gen_range(-1..=max_label);
                let b = rng.gen_range(-1..=max_label);
                a.min(b)
            })
            .collect();
        let mut incoming = vec![Vec::new(); n];
        let mut outgoing = vec![Vec::new(); n];
        for (k, &(t, h)) in directed.iter().enumerate() {
            outgoing[t].push(k);
            incoming[h].push(k);
        }
        let degree: Vec<usize> = (0..n).map(|v| incoming[v].len() + outgoing[v].len()).collect();
        let mut vlabels = Vec::with_capacity(n);
        let mut boundary = Vec::new();
        let mut ok = true;
        for v in 0..n {
            let side = |list: &Vec<usize>| {
                let mut sum = 0;
                let mut any = false;
                for &e in list {
                    if elabels[e] >= 0 {
                        sum += elabels[e];
                        any = true;
                    }
                }
                (sum, any)
            };
            let (isum, iany) = side(&incoming[v]);
            let (osum, oany) = side(&outgoing[v]);
            let mut lo = -1;
            if iany {
                lo = lo.max(isum);
            }
            if oany {
                lo = lo.max(osum);
            }
            if degree[v] == 1 && n > 1 && rng.gen_bool(0.25) {
                // Boundary leaf: label forced to the edge's label.
                let e = incoming[v].first().or(outgoing[v].first()).copied().unwrap();
                vlabels.push(elabels[e]);
                boundary.push(v);
                continue;
            }
            if lo > max_label {
                ok = false;
                break;
            }
            vlabels.push(rng.gen_range(lo..=max_label));
        }
        if !ok {
            continue;
        }
        let ids: Vec<String> = (0..n).map(|v| format!("v{v}")).collect();
        let tree = Ditree::from_parts(
            ids.clone(),
            directed
                .iter()
                .map(|&(t, h)| (ids[t].clone(), ids[h].clone()))
                .collect(),
            boundary.iter().map(|&v| ids[v].clone()).collect(),
        )
        .expect("generated structure is a tree");
        let lambda = LabelFunction::from_vecs(&tree, vlabels, elabels).expect("labels in range");
        return validate(tree, lambda).expect("construction satisfies both conditions");
    }
}

/// Random leaf-elimination order helper used by amalgamation tests.
pub fn shuffled<T: Clone>(rng: &mut impl Rng, items: &[T]) -> Vec<T> {
    let mut v = items.to_vec();
    v.shuffle(rng);
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn guards() {
        assert!(matches!(
            enumerate(&EnumerationSpec::new(9, 2)),
            Err(Error::GuardExceeded(_))
        ));
        assert!(matches!(
            enumerate(&EnumerationSpec::new(3, 7)),
            Err(Error::GuardExceeded(_))
        ));
    }

    #[test]
    fn single_vertex_positive() {
        let trees = enumerate(&EnumerationSpec::new(1, 1).with(|r| r.positive = true)).unwrap();
        assert_eq!(trees.len(), 1);
        assert_eq!(trees[0].vertex_label(0), 1);
    }

    #[test]
    fn two_vertex_positive_productless() {
        // Boundaryless case analysis: the edge label must be strictly below
        // both vertex labels, so with labels capped at 2 the only choice is
        // edge 1, vertices (2, 2).
        let spec = EnumerationSpec::new(2, 2).with(|r| {
            r.positive = true;
            r.productless = true;
            r.boundaryless = true;
        });
        let trees = enumerate(&spec).unwrap();
        let two: Vec<_> = trees
            .iter()
            .filter(|wt| wt.tree().vertex_count() == 2)
            .collect();
        assert_eq!(two.len(), 1);
        assert_eq!(two[0].labels().vertex_labels(), &[2, 2]);
        assert_eq!(two[0].labels().edge_labels(), &[1]);
        // Plus the single-vertex trees with labels 1 and 2.
        assert_eq!(trees.len(), 3);

        // Boundary vertices are exempt from the product-edge definition, so
        // allowing them adds the one-boundary class and the two all-boundary
        // classes with labels 1 and 2.
        let spec = EnumerationSpec::new(2, 2).with(|r| {
            r.positive = true;
            r.productless = true;
        });
        let trees = enumerate(&spec).unwrap();
        assert_eq!(
            trees.iter().filter(|wt| wt.tree().vertex_count() == 2).count(),
            4
        );
    }

    #[test]
    fn no_duplicates_small() {
        let spec = EnumerationSpec::new(4, 2);
        let trees = enumerate(&spec).unwrap();
        let mut codes: Vec<_> = trees.iter().map(|t| t.canonical_form()).collect();
        let before = codes.len();
        codes.dedup();
        assert_eq!(before, codes.len());
    }

    #[test]
    fn free_tree_counts() {
        // Known numbers of free trees on n vertices.
        for (n, count) in [(1, 1), (2, 1), (3, 1), (4, 2), (5, 3), (6, 6), (7, 11)] {
            assert_eq!(free_trees(n).len(), count, "n = {n}");
        }
    }

    #[test]
    fn ditree_enumeration_counts() {
        // Independent check on two vertices: one ditree up to reversal.
        let all = enumerate_ditrees(2).unwrap();
        assert_eq!(all.iter().filter(|t| t.vertex_count() == 2).count(), 1);
        // Three vertices: path has a->v->b and a->v<-b (v->a, v->b is the
        // reversal of the latter), so 2 classes.
        let all = enumerate_ditrees(3).unwrap();
        assert_eq!(all.iter().filter(|t| t.vertex_count() == 3).count(), 2);
    }

    #[test]
    fn min_net_extent_examples() {
        let t = Ditree::new(&["a", "b"], &[("a", "b")], &[]).unwrap();
        assert_eq!(min_net_extent_bruteforce(&t, 3).unwrap(), 3);
        let t = Ditree::new(&["a", "v", "b"], &[("a", "v"), ("v", "b")], &[]).unwrap();
        assert_eq!(min_net_extent_bruteforce(&t, 4).unwrap(), 4);
    }

    #[test]
    fn random_trees_are_valid() {
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let wt = random_width_tree(&mut rng, 12, 9);
            assert!(validate(wt.tree().clone(), wt.labels().clone()).is_ok());
        }
    }
}
