//! Multicompositions and multipartitions of n with r components, their
//! dominance order, conjugation, and canonical enumeration.
//!
//! Canonical form: zero parts are stripped but empty components keep their
//! slot, so the number of components is always exactly r.  Component and
//! row indices are 0-based in code; display is 1-based to match the usual
//! notation.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MultiComposition {
    comps: Vec<Vec<usize>>,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MultiPartition(MultiComposition);

/// A node of a shape: (component, row, column), all 0-based.
pub type Node = (usize, usize, usize);

impl MultiComposition {
    /// Canonicalizes by dropping zero parts; components themselves stay.
    pub fn new(comps: Vec<Vec<usize>>) -> MultiComposition {
        let comps = comps
            .into_iter()
            .map(|c| c.into_iter().filter(|&p| p > 0).collect())
            .collect();
        MultiComposition { comps }
    }

    pub fn r(&self) -> usize {
        self.comps.len()
    }

    pub fn n(&self) -> usize {
        self.comps.iter().map(|c| c.iter().sum::<usize>()).sum()
    }

    pub fn comps(&self) -> &[Vec<usize>] {
        &self.comps
    }

    pub fn comp(&self, k: usize) -> &[usize] {
        &self.comps[k]
    }

    /// Component sizes (|kappa^(1)|, ..., |kappa^(r)|).
    pub fn alpha(&self) -> Vec<usize> {
        self.comps.iter().map(|c| c.iter().sum()).collect()
    }

    pub fn is_partition(&self) -> bool {
        self.comps
            .iter()
            .all(|c| c.windows(2).all(|w| w[0] >= w[1]))
    }

    /// All parts flattened across components, for the row stabiliser.
    pub fn flat_parts(&self) -> Vec<usize> {
        self.comps.iter().flatten().copied().collect()
    }

    /// Nodes in reading order: by component, then row, then column.  The
    /// initial tableau fills 1..n along this order.
    pub fn nodes(&self) -> Vec<Node> {
        let mut out = Vec::with_capacity(self.n());
        for (k, c) in self.comps.iter().enumerate() {
            for (i, &len) in c.iter().enumerate() {
                for j in 0..len {
                    out.push((k, i, j));
                }
            }
        }
        out
    }

    pub fn row_len(&self, comp: usize, row: usize) -> usize {
        self.comps[comp].get(row).copied().unwrap_or(0)
    }

    /// Partial dominance sum: everything in components before k plus the
    /// first j parts of component k.
    fn partial_sum(&self, k: usize, j: usize) -> usize {
        let before: usize = self.comps[..k]
            .iter()
            .map(|c| c.iter().sum::<usize>())
            .sum();
        let within: usize = self.comps[k].iter().take(j).sum();
        before + within
    }

    /// The concatenated partial-sum vector indexing the dominance order.
    pub fn dominance_key(&self) -> Vec<usize> {
        let n = self.n();
        let mut key = Vec::with_capacity(self.r() * (n + 1));
        for k in 0..self.r() {
            for j in 0..=n {
                key.push(self.partial_sum(k, j));
            }
        }
        key
    }

    /// Dominance comparison; `None` when incomparable.  Greater means
    /// "dominates".
    pub fn dominance(&self, other: &MultiComposition) -> Option<Ordering> {
        assert_eq!(self.r(), other.r(), "component count mismatch");
        assert_eq!(self.n(), other.n(), "size mismatch");
        let a = self.dominance_key();
        let b = other.dominance_key();
        let mut ge = true;
        let mut le = true;
        for (x, y) in a.iter().zip(&b) {
            ge &= x >= y;
            le &= x <= y;
        }
        match (ge, le) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Greater),
            (false, true) => Some(Ordering::Less),
            (false, false) => None,
        }
    }

    pub fn dominates(&self, other: &MultiComposition) -> bool {
        matches!(
            self.dominance(other),
            Some(Ordering::Greater) | Some(Ordering::Equal)
        )
    }

    pub fn strictly_dominates(&self, other: &MultiComposition) -> bool {
        self.dominance(other) == Some(Ordering::Greater)
    }

    /// All multicompositions of n with r components, most dominant first.
    /// The order is lexicographic descending on the dominance key, which
    /// refines the dominance order.
    pub fn enumerate(r: usize, n: usize) -> Vec<MultiComposition> {
        let mut out = Vec::new();
        let mut weights = Vec::new();
        weight_vectors(r, n, &mut Vec::new(), &mut weights);
        for w in weights {
            let per_slot: Vec<Vec<Vec<usize>>> =
                w.iter().map(|&m| compositions_of(m)).collect();
            cartesian(&per_slot, &mut Vec::new(), &mut out);
        }
        sort_by_dominance_key(&mut out);
        out
    }

    pub fn as_partition(&self) -> Option<MultiPartition> {
        self.is_partition().then(|| MultiPartition(self.clone()))
    }

    /// The interval blocks attached to the nonempty components: block k
    /// covers positions a_{k-1}+1 ..= a_k (1-based), where the a's are the
    /// running component sizes.  Returns (positions, component index).
    pub fn interval_blocks(&self) -> Vec<(Vec<usize>, usize)> {
        let mut out = Vec::new();
        let mut pos = 0usize;
        for (k, c) in self.comps.iter().enumerate() {
            let size: usize = c.iter().sum();
            if size == 0 {
                continue;
            }
            let block: Vec<usize> = (pos + 1..=pos + size).collect();
            out.push((block, k));
            pos += size;
        }
        out
    }
}

fn weight_vectors(slots: usize, total: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if slots == 1 {
        acc.push(total);
        out.push(acc.clone());
        acc.pop();
        return;
    }
    for first in 0..=total {
        acc.push(first);
        weight_vectors(slots - 1, total - first, acc, out);
        acc.pop();
    }
}

/// Compositions of m with positive parts; m = 0 gives the empty one.
fn compositions_of(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut acc = Vec::new();
    fn rec(rest: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(acc.clone());
            return;
        }
        for first in 1..=rest {
            acc.push(first);
            rec(rest - first, acc, out);
            acc.pop();
        }
    }
    rec(m, &mut acc, &mut out);
    out
}

fn partitions_of(m: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(acc.clone());
            return;
        }
        for first in (1..=rest.min(max)).rev() {
            acc.push(first);
            rec(rest - first, first, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out
}

fn cartesian(per_slot: &[Vec<Vec<usize>>], acc: &mut Vec<Vec<usize>>, out: &mut Vec<MultiComposition>) {
    if acc.len() == per_slot.len() {
        out.push(MultiComposition {
            comps: acc.clone(),
        });
        return;
    }
    for choice in &per_slot[acc.len()] {
        acc.push(choice.clone());
        cartesian(per_slot, acc, out);
        acc.pop();
    }
}

fn sort_by_dominance_key(shapes: &mut [MultiComposition]) {
    let mut keyed: Vec<(Vec<usize>, usize)> = shapes
        .iter()
        .enumerate()
        .map(|(i, s)| (s.dominance_key(), i))
        .collect();
    keyed.sort_by(|a, b| b.0.cmp(&a.0));
    let order: Vec<usize> = keyed.into_iter().map(|(_, i)| i).collect();
    let old: Vec<MultiComposition> = shapes.to_vec();
    for (dst, src) in order.into_iter().enumerate() {
        shapes[dst] = old[src].clone();
    }
}

impl MultiPartition {
    pub fn new(comps: Vec<Vec<usize>>) -> MultiPartition {
        let c = MultiComposition::new(comps);
        assert!(c.is_partition(), "rows must weakly decrease: {}", c);
        MultiPartition(c)
    }

    pub fn composition(&self) -> &MultiComposition {
        &self.0
    }

    pub fn r(&self) -> usize {
        self.0.r()
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn comps(&self) -> &[Vec<usize>] {
        self.0.comps()
    }

    pub fn comp(&self, k: usize) -> &[usize] {
        self.0.comp(k)
    }

    pub fn alpha(&self) -> Vec<usize> {
        self.0.alpha()
    }

    pub fn nodes(&self) -> Vec<Node> {
        self.0.nodes()
    }

    pub fn flat_parts(&self) -> Vec<usize> {
        self.0.flat_parts()
    }

    pub fn row_len(&self, comp: usize, row: usize) -> usize {
        self.0.row_len(comp, row)
    }

    pub fn dominates(&self, other: &MultiPartition) -> bool {
        self.0.dominates(&other.0)
    }

    pub fn strictly_dominates(&self, other: &MultiPartition) -> bool {
        self.0.strictly_dominates(&other.0)
    }

    pub fn dominance(&self, other: &MultiPartition) -> Option<Ordering> {
        self.0.dominance(&other.0)
    }

    /// Transpose each component and reverse the component order.  This is
    /// the order-reversing involution of the dominance order.
    pub fn conjugate(&self) -> MultiPartition {
        let comps = self
            .0
            .comps
            .iter()
            .rev()
            .map(|c| transpose_partition(c))
            .collect();
        MultiPartition(MultiComposition { comps })
    }

    /// Transpose each component in place, keeping the component order (and
    /// hence the component sizes).  This is the involution pairing the two
    /// flavors of cell modules.
    pub fn transpose(&self) -> MultiPartition {
        let comps = self
            .0
            .comps
            .iter()
            .map(|c| transpose_partition(c))
            .collect();
        MultiPartition(MultiComposition { comps })
    }

    /// Whether every component is e-restricted; with no quantum
    /// characteristic (e = None) every multipartition counts as restricted.
    pub fn is_e_restricted(&self, e: Option<u64>) -> bool {
        let Some(e) = e else {
            return true;
        };
        self.0.comps.iter().all(|c| {
            (0..c.len()).all(|i| {
                let next = c.get(i + 1).copied().unwrap_or(0);
                ((c[i] - next) as u64) < e
            })
        })
    }

    pub fn interval_blocks(&self) -> Vec<(Vec<usize>, usize)> {
        self.0.interval_blocks()
    }

    /// All multipartitions of n with r components, most dominant first.
    pub fn enumerate(r: usize, n: usize) -> Vec<MultiPartition> {
        let mut weights = Vec::new();
        weight_vectors(r, n, &mut Vec::new(), &mut weights);
        let mut out = Vec::new();
        for w in weights {
            let per_slot: Vec<Vec<Vec<usize>>> =
                w.iter().map(|&m| partitions_of(m)).collect();
            let mut raw = Vec::new();
            cartesian(&per_slot, &mut Vec::new(), &mut raw);
            out.extend(raw);
        }
        sort_by_dominance_key(&mut out);
        out.into_iter().map(MultiPartition).collect()
    }
}

fn transpose_partition(c: &[usize]) -> Vec<usize> {
    let cols = c.first().copied().unwrap_or(0);
    (1..=cols)
        .map(|j| c.iter().filter(|&&len| len >= j).count())
        .collect()
}

fn fmt_comps(comps: &[Vec<usize>], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "(")?;
    for (k, c) in comps.iter().enumerate() {
        if k > 0 {
            write!(f, "|")?;
        }
        if c.is_empty() {
            write!(f, "-")?;
        } else {
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p)?;
            }
        }
    }
    write!(f, ")")
}

impl fmt::Display for MultiComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_comps(&self.comps, f)
    }
}

impl fmt::Debug for MultiComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_comps(&self.0.comps, f)
    }
}

impl fmt::Debug for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(comps: &[&[usize]]) -> MultiPartition {
        MultiPartition::new(comps.iter().map(|c| c.to_vec()).collect())
    }

    #[test]
    fn canonical_form_strips_zero_parts() {
        let c = MultiComposition::new(vec![vec![2, 0, 1], vec![0]]);
        assert_eq!(c.comps(), &[vec![2, 1], vec![]]);
        assert_eq!(c.n(), 3);
        assert_eq!(c.r(), 2);
    }

    #[test]
    fn enumeration_at_two_two() {
        let shapes = MultiPartition::enumerate(2, 2);
        let expect = vec![
            mp(&[&[2], &[]]),
            mp(&[&[1, 1], &[]]),
            mp(&[&[1], &[1]]),
            mp(&[&[], &[2]]),
            mp(&[&[], &[1, 1]]),
        ];
        assert_eq!(shapes, expect);
    }

    #[test]
    fn composition_counts() {
        assert_eq!(MultiComposition::enumerate(2, 3).len(), 12);
        assert_eq!(MultiComposition::enumerate(1, 3).len(), 4);
        assert_eq!(MultiPartition::enumerate(2, 3).len(), 10);
        assert_eq!(MultiPartition::enumerate(3, 2).len(), 9);
    }

    #[test]
    fn enumeration_order_refines_dominance() {
        for (r, n) in [(1usize, 4usize), (2, 3), (3, 2)] {
            let shapes = MultiComposition::enumerate(r, n);
            for i in 0..shapes.len() {
                for j in i + 1..shapes.len() {
                    assert!(
                        !shapes[j].strictly_dominates(&shapes[i]),
                        "{} listed after {}",
                        shapes[j],
                        shapes[i]
                    );
                }
            }
        }
    }

    #[test]
    fn dominance_examples() {
        let a = mp(&[&[1, 1, 1], &[]]);
        let b = mp(&[&[2], &[1]]);
        assert_eq!(a.dominance(&b), None, "incomparable pair");
        let c = mp(&[&[1, 1], &[]]);
        let d = mp(&[&[1], &[1]]);
        assert!(c.strictly_dominates(&d));
    }

    #[test]
    fn conjugation_is_a_dominance_antiautomorphism() {
        let shapes = MultiPartition::enumerate(2, 3);
        for a in &shapes {
            assert_eq!(&a.conjugate().conjugate(), a);
            for b in &shapes {
                assert_eq!(
                    a.dominates(b),
                    b.conjugate().dominates(&a.conjugate()),
                    "{} vs {}",
                    a,
                    b
                );
            }
        }
        assert_eq!(mp(&[&[2], &[]]).conjugate(), mp(&[&[], &[1, 1]]));
        assert_eq!(mp(&[&[2, 1], &[1]]).conjugate(), mp(&[&[1], &[2, 1]]));
    }

    #[test]
    fn interval_blocks_skip_empty_components() {
        let lam = MultiPartition::new(vec![vec![2], vec![], vec![1]]);
        let blocks = lam.interval_blocks();
        assert_eq!(blocks, vec![(vec![1, 2], 0), (vec![3], 2)]);
    }

    #[test]
    fn e_restriction() {
        let lam = mp(&[&[3], &[]]);
        assert!(!lam.is_e_restricted(Some(2)));
        assert!(lam.is_e_restricted(Some(4)));
        assert!(lam.is_e_restricted(None));
        assert!(mp(&[&[2, 1], &[]]).is_e_restricted(Some(2)));
    }
}
