//! One-off search used to pin the figure6 fixture orientation. Run with
//! `cargo test --test dev_fig6_search -- --nocapture --ignored`.

use std::collections::{BTreeMap, HashSet};

use widthtree::flows::{self, BoundMode};
use widthtree::tree::{sources_sinks, Ditree};

fn prufer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let l = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((l.min(s), l.max(s)));
        degree[l] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0].min(rest[1]), rest[0].max(rest[1])));
    edges
}

fn shape_code(n: usize, edges: &[(usize, usize)]) -> Vec<u8> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
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
        .unwrap()
}

fn nine_vertex_shapes() -> Vec<Vec<(usize, usize)>> {
    let n = 9;
    let mut seen = HashSet::new();
    let mut shapes = Vec::new();
    let mut seq = vec![0usize; n - 2];
    loop {
        let edges = prufer_decode(n, &seq);
        let code = shape_code(n, &edges);
        if seen.insert(code) {
            shapes.push(edges);
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
    shapes
}

#[test]
#[ignore]
fn search_figure6_orientation() {
    let n = 9;
    let shapes = nine_vertex_shapes();
    println!("shapes on 9 vertices: {}", shapes.len());

    // tuple -> (count, exemplar)
    let mut achievable: BTreeMap<(usize, usize, usize), (usize, String)> = BTreeMap::new();
    let mut caption_hits = 0usize;

    for (si, edges) in shapes.iter().enumerate() {
        for omask in 0u32..(1 << (n - 1)) {
            // Validity with all vertex labels 2, edge labels 1: each side of
            // each vertex carries at most 2 edges.
            let mut indeg = vec![0usize; n];
            let mut outdeg = vec![0usize; n];
            let directed: Vec<(usize, usize)> = edges
                .iter()
                .enumerate()
                .map(|(k, &(a, b))| {
                    let (t, h) = if omask & (1 << k) != 0 { (a, b) } else { (b, a) };
                    outdeg[t] += 1;
                    indeg[h] += 1;
                    (t, h)
                })
                .collect();
            if (0..n).any(|v| indeg[v] > 2 || outdeg[v] > 2) {
                continue;
            }
            let ids: Vec<String> = (0..n).map(|v| format!("v{v}")).collect();
            let tree = Ditree::from_parts(
                ids.clone(),
                directed
                    .iter()
                    .map(|&(t, h)| (ids[t].clone(), ids[h].clone()))
                    .collect(),
                Vec::new(),
            )
            .unwrap();
            let report = sources_sinks(&tree);
            let aug = flows::lower_bound(&tree, BoundMode::AugmentedCut).unwrap();
            if aug != 10 {
                continue;
            }
            let formula = flows::lower_bound(&tree, BoundMode::PaperFormula).unwrap();
            if formula != 10 {
                continue;
            }
            let max_t = (formula as usize) - report.n2_minus - report.n2_plus;
            let key = (report.n2_minus, report.n2_plus, max_t);
            if key == (1, 4, 5) {
                caption_hits += 1;
            }
            let sources_cut_size: usize = (0..tree.vertex_count())
                .filter(|&v| tree.in_degree(v) == 0)
                .map(|v| tree.out_degree(v))
                .sum();
            let entry = achievable.entry(key).or_insert_with(|| {
                (
                    0,
                    format!(
                        "shape {si} omask {omask:b} edges {directed:?} sources_cut {sources_cut_size}"
                    ),
                )
            });
            entry.0 += 1;
        }
    }
    println!("orientations matching caption triple (1,4,5): {caption_hits}");
    println!("achievable (n2_minus, n2_plus, max_cut_T) with aug=formula=10:");
    for (key, (count, exemplar)) in &achievable {
        println!("  {key:?}: {count} hits, e.g. {exemplar}");
    }
}

/// Candidate shapes read off the published drawing, orientation unknown.
/// Vertices: t1..t4 = 0..3, m1 = 4, m2 = 5, b1 = 6, b2 = 7, b3 = 8.
fn drawing_shapes() -> Vec<(&'static str, Vec<(usize, usize)>)> {
    vec![
        (
            "A (m1 adjacent to t1,t2,t3,m2)",
            vec![(4, 0), (4, 1), (4, 2), (4, 5), (5, 7), (5, 8), (0, 6), (8, 3)],
        ),
        (
            "B (m1 adjacent to t2,t3,m2; b1 between t1,t2)",
            vec![(4, 1), (4, 2), (4, 5), (5, 7), (5, 8), (1, 6), (6, 0), (8, 3)],
        ),
    ]
}

#[test]
#[ignore]
fn drawing_shape_tuples() {
    let n = 9;
    for (name, edges) in drawing_shapes() {
        let mut achievable: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
        let mut best: BTreeMap<(usize, usize, usize), (u32, usize)> = BTreeMap::new();
        for omask in 0u32..(1 << (n - 1)) {
            let mut indeg = vec![0usize; n];
            let mut outdeg = vec![0usize; n];
            let directed: Vec<(usize, usize)> = edges
                .iter()
                .enumerate()
                .map(|(k, &(a, b))| {
                    let (t, h) = if omask & (1 << k) != 0 { (a, b) } else { (b, a) };
                    outdeg[t] += 1;
                    indeg[h] += 1;
                    (t, h)
                })
                .collect();
            if (0..n).any(|v| indeg[v] > 2 || outdeg[v] > 2) {
                continue;
            }
            let ids: Vec<String> = (0..n).map(|v| format!("v{v}")).collect();
            let tree = Ditree::from_parts(
                ids.clone(),
                directed
                    .iter()
                    .map(|&(t, h)| (ids[t].clone(), ids[h].clone()))
                    .collect(),
                Vec::new(),
            )
            .unwrap();
            let report = sources_sinks(&tree);
            let aug = flows::lower_bound(&tree, BoundMode::AugmentedCut).unwrap() as usize;
            let formula = flows::lower_bound(&tree, BoundMode::PaperFormula).unwrap() as usize;
            let max_t = formula - report.n2_minus - report.n2_plus;
            let sources_cut: usize = (0..tree.vertex_count())
                .filter(|&v| tree.in_degree(v) == 0)
                .map(|v| tree.out_degree(v))
                .sum();
            let key = (aug, formula, report.n2_minus * 100 + report.n2_plus * 10 + max_t);
            *achievable.entry(key).or_insert(0) += 1;
            best.entry(key).or_insert((omask, sources_cut));
        }
        println!("shape {name}: {achievable:?}");
        for (key, (omask, sources_cut)) in &best {
            println!("  {key:?}: omask {omask:09b} sources_cut {sources_cut}");
        }
    }
}

#[test]
#[ignore]
fn shape_a_245_orientations() {
    let n = 9;
    let (_, edges) = drawing_shapes().into_iter().next().unwrap();
    for omask in 0u32..(1 << (n - 1)) {
        let mut indeg = vec![0usize; n];
        let mut outdeg = vec![0usize; n];
        let directed: Vec<(usize, usize)> = edges
            .iter()
            .enumerate()
            .map(|(k, &(a, b))| {
                let (t, h) = if omask & (1 << k) != 0 { (a, b) } else { (b, a) };
                outdeg[t] += 1;
                indeg[h] += 1;
                (t, h)
            })
            .collect();
        if (0..n).any(|v| indeg[v] > 2 || outdeg[v] > 2) {
            continue;
        }
        let ids: Vec<String> = (0..n).map(|v| format!("v{v}")).collect();
        let tree = Ditree::from_parts(
            ids.clone(),
            directed
                .iter()
                .map(|&(t, h)| (ids[t].clone(), ids[h].clone()))
                .collect(),
            Vec::new(),
        )
        .unwrap();
        let report = sources_sinks(&tree);
        let formula = flows::lower_bound(&tree, BoundMode::PaperFormula).unwrap() as usize;
        let max_t = formula - report.n2_minus - report.n2_plus;
        if (report.n2_minus, report.n2_plus, max_t) != (2, 4, 5) {
            continue;
        }
        let sources_cut: usize = (0..tree.vertex_count())
            .filter(|&v| tree.in_degree(v) == 0)
            .map(|v| tree.out_degree(v))
            .sum();
        let aug = flows::lower_bound(&tree, BoundMode::AugmentedCut).unwrap();
        println!(
            "omask {omask:09b} sources_cut {sources_cut} aug {aug} directed {directed:?} sources {:?}",
            report.sources
        );
    }
}
