//! Canonical forms for width trees.
//!
//! Two width trees are equivalent when a label-preserving isomorphism of the
//! underlying trees maps one to the other, either preserving or reversing
//! every edge orientation, and carrying boundary vertices to boundary
//! vertices. The canonical form realizes that relation as byte equality: the
//! tree is rooted at the center (or both centers) of its underlying tree and
//! encoded recursively with sorted child codes; the final code is the
//! lexicographic minimum over the candidate roots of the tree and of its full
//! reversal.

use crate::tree::{Ditree, WidthTree};

/// Canonical byte code; equal codes mean equivalent width trees.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

/// Centers of the underlying undirected tree (one or two vertices).
fn centers(tree: &Ditree) -> Vec<usize> {
    let n = tree.vertex_count();
    if n == 1 {
        return vec![0];
    }
    let mut degree: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for u in tree.neighbors(v) {
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
    (0..n).filter(|&v| !removed[v]).collect()
}

fn push_int(buf: &mut Vec<u8>, n: i64) {
    buf.extend_from_slice(n.to_string().as_bytes());
    buf.push(b';');
}

/// Recursive sorted-children encoding rooted at `v`.
fn encode(wt: &WidthTree, v: usize, parent: Option<usize>, out: &mut Vec<u8>) {
    let tree = wt.tree();
    out.push(b'v');
    push_int(out, wt.vertex_label(v));
    out.push(if tree.is_boundary(v) { b'B' } else { b'.' });
    let mut children: Vec<Vec<u8>> = Vec::new();
    for &e in tree.incoming_edges(v) {
        let u = tree.edges()[e].0;
        if Some(u) == parent {
            continue;
        }
        let mut entry = vec![b'<'];
        push_int(&mut entry, wt.edge_label(e));
        encode(wt, u, Some(v), &mut entry);
        children.push(entry);
    }
    for &e in tree.outgoing_edges(v) {
        let u = tree.edges()[e].1;
        if Some(u) == parent {
            continue;
        }
        let mut entry = vec![b'>'];
        push_int(&mut entry, wt.edge_label(e));
        encode(wt, u, Some(v), &mut entry);
        children.push(entry);
    }
    children.sort();
    out.push(b'(');
    for c in children {
        out.extend_from_slice(&c);
    }
    out.push(b')');
}

fn directed_code(wt: &WidthTree) -> Vec<u8> {
    centers(wt.tree())
        .into_iter()
        .map(|root| {
            let mut buf = Vec::new();
            encode(wt, root, None, &mut buf);
            buf
        })
        .min()
        .expect("trees are nonempty")
}

/// Deterministic code, invariant under vertex relabelling and under global
/// orientation reversal; distinguishes labels and boundary placement.
pub fn canonical_form(wt: &WidthTree) -> CanonicalForm {
    let forward = directed_code(wt);
    let backward = directed_code(&wt.reversed());
    CanonicalForm(forward.min(backward))
}

impl WidthTree {
    pub fn canonical_form(&self) -> CanonicalForm {
        canonical_form(self)
    }

    /// Equivalence per the canonical encoding (ids never participate).
    pub fn is_equivalent_to(&self, other: &WidthTree) -> bool {
        self.canonical_form() == other.canonical_form()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::WidthTree;

    /// Exhaustive oracle: try every vertex bijection with both orientation
    /// senses. Only usable on small trees.
    pub(crate) fn equivalent_bruteforce(a: &WidthTree, b: &WidthTree) -> bool {
        let (ta, tb) = (a.tree(), b.tree());
        let n = ta.vertex_count();
        if n != tb.vertex_count() || ta.edge_count() != tb.edge_count() {
            return false;
        }
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            for sense in [false, true] {
                let mut ok = true;
                for v in 0..n {
                    if a.vertex_label(v) != b.vertex_label(perm[v])
                        || ta.is_boundary(v) != tb.is_boundary(perm[v])
                    {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    for e in 0..ta.edge_count() {
                        let (t, h) = ta.edges()[e];
                        let want = if sense {
                            (perm[h], perm[t])
                        } else {
                            (perm[t], perm[h])
                        };
                        let found = tb
                            .edges()
                            .iter()
                            .position(|&x| x == want)
                            .map(|k| b.edge_label(k) == a.edge_label(e));
                        if found != Some(true) {
                            ok = false;
                            break;
                        }
                    }
                }
                if ok {
                    return true;
                }
            }
            // Next permutation in lexicographic order.
            let mut i = n.wrapping_sub(2);
            while i != usize::MAX && perm[i] >= perm[i + 1] {
                i = i.wrapping_sub(1);
            }
            if i == usize::MAX {
                return false;
            }
            let mut j = n - 1;
            while perm[j] <= perm[i] {
                j -= 1;
            }
            perm.swap(i, j);
            perm[i + 1..].reverse();
        }
    }

    #[test]
    fn relabelling_preserves_code() {
        let a = WidthTree::from_data(&[("a", 2), ("b", 2)], &[("a", "b", 1)], &[]).unwrap();
        let b = WidthTree::from_data(&[("x", 2), ("y", 2)], &[("y", "x", 1)], &[]).unwrap();
        assert!(a.is_equivalent_to(&b));
    }

    #[test]
    fn global_reversal_preserves_code() {
        let a = WidthTree::from_data(&[("a", 2), ("b", 3)], &[("a", "b", 1)], &[]).unwrap();
        assert_eq!(a.canonical_form(), a.reversed().canonical_form());
    }

    #[test]
    fn orientation_pattern_distinguishes() {
        // a->v->b versus a->v<-b are not related by a global reversal.
        let coherent = WidthTree::from_data(
            &[("a", 2), ("v", 2), ("b", 2)],
            &[("a", "v", 1), ("v", "b", 1)],
            &[],
        )
        .unwrap();
        let convergent = WidthTree::from_data(
            &[("a", 2), ("v", 2), ("b", 2)],
            &[("a", "v", 1), ("b", "v", 1)],
            &[],
        )
        .unwrap();
        assert!(!equivalent_bruteforce(&coherent, &convergent));
        assert_ne!(coherent.canonical_form(), convergent.canonical_form());
    }

    #[test]
    fn boundary_placement_distinguishes() {
        let plain =
            WidthTree::from_data(&[("a", 1), ("b", 1)], &[("a", "b", 1)], &[]).unwrap();
        let marked =
            WidthTree::from_data(&[("a", 1), ("b", 1)], &[("a", "b", 1)], &["b"]).unwrap();
        assert_ne!(plain.canonical_form(), marked.canonical_form());
    }

    #[test]
    fn matches_bruteforce_on_small_pairs() {
        let trees = [
            WidthTree::from_data(
                &[("a", 3), ("b", 2), ("c", 2)],
                &[("a", "b", 1), ("a", "c", 1)],
                &[],
            )
            .unwrap(),
            WidthTree::from_data(
                &[("x", 2), ("y", 3), ("z", 2)],
                &[("y", "x", 1), ("y", "z", 1)],
                &[],
            )
            .unwrap(),
            WidthTree::from_data(
                &[("x", 2), ("y", 3), ("z", 2)],
                &[("x", "y", 1), ("y", "z", 1)],
                &[],
            )
            .unwrap(),
        ];
        for i in 0..trees.len() {
            for j in 0..trees.len() {
                assert_eq!(
                    trees[i].canonical_form() == trees[j].canonical_form(),
                    equivalent_bruteforce(&trees[i], &trees[j]),
                    "mismatch on pair ({i}, {j})"
                );
            }
        }
    }
}
