//! Tableaux on multicomposition shapes: row-standard and standard fillings
//! by 1..n, typed fillings by pairs (row, component), semistandardness,
//! conjugation, residues, and the dominance order on tableaux.
//!
//! Enumeration orders are fixed once and for all: row-standard tableaux are
//! listed by the lexicographic order of their reading words, which is the
//! same as listing their coset representatives d(t) by one-line notation;
//! standard tableaux inherit that order by filtering.

use crate::perm::{Permutation, YoungSubgroup};
use crate::shapes::{MultiComposition, MultiPartition, Node};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A bijective filling of a shape by 1..n.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MultiTableau {
    shape: MultiComposition,
    /// rows[comp][row][col] = entry, 1-based values.
    rows: Vec<Vec<Vec<usize>>>,
}

impl MultiTableau {
    /// The initial tableau t^mu, filling 1..n along the reading order.
    pub fn initial(shape: &MultiComposition) -> MultiTableau {
        let mut rows: Vec<Vec<Vec<usize>>> = shape
            .comps()
            .iter()
            .map(|c| c.iter().map(|&len| vec![0; len]).collect())
            .collect();
        for (m, (k, i, j)) in shape.nodes().into_iter().enumerate() {
            rows[k][i][j] = m + 1;
        }
        MultiTableau {
            shape: shape.clone(),
            rows,
        }
    }

    pub fn shape(&self) -> &MultiComposition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn entry(&self, node: Node) -> usize {
        self.rows[node.0][node.1][node.2]
    }

    /// The node holding a given value.
    pub fn position_of(&self, value: usize) -> Node {
        for (k, comp) in self.rows.iter().enumerate() {
            for (i, row) in comp.iter().enumerate() {
                for (j, &e) in row.iter().enumerate() {
                    if e == value {
                        return (k, i, j);
                    }
                }
            }
        }
        panic!("value {} not present", value);
    }

    /// Entries along the reading order; equals the one-line notation of
    /// d(t).
    pub fn reading_word(&self) -> Vec<usize> {
        self.shape
            .nodes()
            .into_iter()
            .map(|x| self.entry(x))
            .collect()
    }

    /// Right action: replaces each entry m by w(m).
    pub fn act(&self, w: &Permutation) -> MultiTableau {
        assert_eq!(w.degree(), self.n());
        let rows = self
            .rows
            .iter()
            .map(|comp| {
                comp.iter()
                    .map(|row| row.iter().map(|&e| w.apply(e)).collect())
                    .collect()
            })
            .collect();
        MultiTableau {
            shape: self.shape.clone(),
            rows,
        }
    }

    /// The permutation d(t) with t = (initial tableau) . d(t).
    pub fn d_perm(&self) -> Permutation {
        Permutation::from_one_line(&self.reading_word())
    }

    pub fn is_row_standard(&self) -> bool {
        self.rows
            .iter()
            .all(|comp| comp.iter().all(|row| row.windows(2).all(|w| w[0] < w[1])))
    }

    pub fn is_standard(&self) -> bool {
        if !self.shape.is_partition() || !self.is_row_standard() {
            return false;
        }
        self.rows.iter().all(|comp| {
            comp.windows(2).all(|pair| {
                pair[1]
                    .iter()
                    .enumerate()
                    .all(|(j, &below)| below > pair[0][j])
            })
        })
    }

    /// Row-standard tableaux in reading-word lexicographic order.
    pub fn row_standard(shape: &MultiComposition) -> Vec<MultiTableau> {
        let initial = MultiTableau::initial(shape);
        let sub = YoungSubgroup::from_parts(shape.n(), &shape.flat_parts());
        sub.coset_reps()
            .iter()
            .map(|d| initial.act(d))
            .collect()
    }

    /// Standard tableaux, in the order inherited from the row-standard
    /// list.
    pub fn standard(shape: &MultiPartition) -> Vec<MultiTableau> {
        MultiTableau::row_standard(shape.composition())
            .into_iter()
            .filter(MultiTableau::is_standard)
            .collect()
    }

    /// Shape of the sub-tableau holding the values 1..=k.
    pub fn prefix_shape(&self, k: usize) -> MultiComposition {
        let comps = self
            .rows
            .iter()
            .map(|comp| {
                comp.iter()
                    .map(|row| row.iter().filter(|&&e| e <= k).count())
                    .collect()
            })
            .collect();
        MultiComposition::new(comps)
    }

    /// Dominance on tableaux of the same size: s dominates t when every
    /// prefix shape of s dominates the corresponding prefix of t.
    pub fn dominates(&self, other: &MultiTableau) -> bool {
        assert_eq!(self.n(), other.n());
        (1..=self.n()).all(|k| self.prefix_shape(k).dominates(&other.prefix_shape(k)))
    }

    pub fn strictly_dominates(&self, other: &MultiTableau) -> bool {
        self != other && self.dominates(other)
    }

    /// Conjugate of a tableau on a partition shape: transpose each
    /// component and reverse the component order; entries travel with
    /// their boxes.
    pub fn conjugate(&self) -> MultiTableau {
        let part = self
            .shape
            .as_partition()
            .expect("conjugation needs a partition shape");
        let cshape = part.conjugate();
        let r = self.shape.r();
        let mut rows: Vec<Vec<Vec<usize>>> = cshape
            .comps()
            .iter()
            .map(|c| c.iter().map(|&len| vec![0; len]).collect())
            .collect();
        for (k, comp) in self.rows.iter().enumerate() {
            for (i, row) in comp.iter().enumerate() {
                for (j, &e) in row.iter().enumerate() {
                    rows[r - 1 - k][j][i] = e;
                }
            }
        }
        MultiTableau {
            shape: cshape.composition().clone(),
            rows,
        }
    }

    /// Componentwise transpose: each component transposed in place with
    /// its entries, component order kept.
    pub fn transpose(&self) -> MultiTableau {
        let part = self
            .shape
            .as_partition()
            .expect("transposition needs a partition shape");
        let tshape = part.transpose();
        let mut rows: Vec<Vec<Vec<usize>>> = tshape
            .comps()
            .iter()
            .map(|c| c.iter().map(|&len| vec![0; len]).collect())
            .collect();
        for (k, comp) in self.rows.iter().enumerate() {
            for (i, row) in comp.iter().enumerate() {
                for (j, &e) in row.iter().enumerate() {
                    rows[k][j][i] = e;
                }
            }
        }
        MultiTableau {
            shape: tshape.composition().clone(),
            rows,
        }
    }

    /// 2(j - i) for the node (k, i, j) holding the given value; the residue
    /// itself is q to this exponent.
    pub fn residue_exponent(&self, value: usize) -> i64 {
        let (_, i, j) = self.position_of(value);
        2 * (j as i64 - i as i64)
    }
}

/// The distinguished standard tableau t_lambda, the conjugate of the
/// initial tableau of the conjugate shape.
pub fn t_lambda(shape: &MultiPartition) -> MultiTableau {
    MultiTableau::initial(shape.conjugate().composition()).conjugate()
}

/// w_lambda = d(t_lambda).
pub fn w_lambda(shape: &MultiPartition) -> Permutation {
    t_lambda(shape).d_perm()
}

impl fmt::Display for MultiTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, comp) in self.rows.iter().enumerate() {
            if k > 0 {
                write!(f, " | ")?;
            }
            if comp.is_empty() {
                write!(f, "-")?;
            }
            for (i, row) in comp.iter().enumerate() {
                if i > 0 {
                    write!(f, " / ")?;
                }
                for (j, e) in row.iter().enumerate() {
                    if j > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", e)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An entry of a typed tableau: which row of which component of the
/// initial tableau the value came from.  Ordered by component first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TypedEntry {
    pub comp: usize,
    pub row: usize,
}

impl fmt::Display for TypedEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row + 1, self.comp + 1)
    }
}

impl fmt::Debug for TypedEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A tableau of partition shape lambda whose entries are row classes of a
/// type mu; the image of a standard tableau under the type map, and the
/// index objects for semistandard bases.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TypedTableau {
    shape: MultiPartition,
    typ: MultiComposition,
    rows: Vec<Vec<Vec<TypedEntry>>>,
}

impl TypedTableau {
    /// mu(t): replace each entry of t by the row and component it occupies
    /// in the initial tableau of shape mu.
    pub fn type_of(t: &MultiTableau, mu: &MultiComposition) -> TypedTableau {
        assert_eq!(t.n(), mu.n());
        let shape = t
            .shape()
            .as_partition()
            .expect("typed tableaux live on partition shapes");
        let initial = MultiTableau::initial(mu);
        let rows = t
            .rows
            .iter()
            .map(|comp| {
                comp.iter()
                    .map(|row| {
                        row.iter()
                            .map(|&e| {
                                let (k, i, _) = initial.position_of(e);
                                TypedEntry { comp: k, row: i }
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        TypedTableau {
            shape,
            typ: mu.clone(),
            rows,
        }
    }

    pub fn shape(&self) -> &MultiPartition {
        &self.shape
    }

    pub fn typ(&self) -> &MultiComposition {
        &self.typ
    }

    pub fn entry(&self, node: Node) -> TypedEntry {
        self.rows[node.0][node.1][node.2]
    }

    pub fn is_semistandard(&self) -> bool {
        for (k, comp) in self.rows.iter().enumerate() {
            for row in comp {
                // Entries weakly increase along rows and stay in components
                // at least k.
                if row.iter().any(|e| e.comp < k) {
                    return false;
                }
                if row.windows(2).any(|w| w[0] > w[1]) {
                    return false;
                }
            }
            for pair in comp.windows(2) {
                for (j, below) in pair[1].iter().enumerate() {
                    if !(pair[0][j] < *below) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// All semistandard lambda-tableaux of type mu, lexicographic along the
    /// reading order.
    pub fn semistandard(lam: &MultiPartition, mu: &MultiComposition) -> Vec<TypedTableau> {
        assert_eq!(lam.n(), mu.n());
        // Available entry multiset: mu_i^(k) copies of (i, k).
        let mut palette: Vec<(TypedEntry, usize)> = Vec::new();
        for (k, comp) in mu.comps().iter().enumerate() {
            for (i, &len) in comp.iter().enumerate() {
                palette.push((TypedEntry { comp: k, row: i }, len));
            }
        }
        let nodes = lam.nodes();
        let mut rows: Vec<Vec<Vec<Option<TypedEntry>>>> = lam
            .comps()
            .iter()
            .map(|c| c.iter().map(|&len| vec![None; len]).collect())
            .collect();
        let mut out = Vec::new();
        fn rec(
            lam: &MultiPartition,
            mu: &MultiComposition,
            nodes: &[Node],
            pos: usize,
            palette: &mut Vec<(TypedEntry, usize)>,
            rows: &mut Vec<Vec<Vec<Option<TypedEntry>>>>,
            out: &mut Vec<TypedTableau>,
        ) {
            if pos == nodes.len() {
                let done = rows
                    .iter()
                    .map(|comp| {
                        comp.iter()
                            .map(|row| row.iter().map(|e| e.unwrap()).collect())
                            .collect()
                    })
                    .collect();
                out.push(TypedTableau {
                    shape: lam.clone(),
                    typ: mu.clone(),
                    rows: done,
                });
                return;
            }
            let (k, i, j) = nodes[pos];
            for idx in 0..palette.len() {
                let (e, left) = palette[idx];
                if left == 0 || e.comp < k {
                    continue;
                }
                if j > 0 {
                    let prev = rows[k][i][j - 1].unwrap();
                    if e < prev {
                        continue;
                    }
                }
                if i > 0 {
                    let above = rows[k][i - 1][j].unwrap();
                    if !(above < e) {
                        continue;
                    }
                }
                palette[idx].1 -= 1;
                rows[k][i][j] = Some(e);
                rec(lam, mu, nodes, pos + 1, palette, rows, out);
                rows[k][i][j] = None;
                palette[idx].1 += 1;
            }
        }
        rec(lam, mu, &nodes, 0, &mut palette, &mut rows, &mut out);
        out
    }

    /// T_0^+(lambda, mu): semistandard tableaux, nonempty only when the
    /// component sizes of lambda and mu agree.
    pub fn t0_plus(lam: &MultiPartition, mu: &MultiComposition) -> Vec<TypedTableau> {
        if lam.alpha() != mu.alpha() {
            return Vec::new();
        }
        TypedTableau::semistandard(lam, mu)
    }

    /// The superscript tableau T^lambda, the type map applied to the
    /// initial tableau of its own shape.
    pub fn t_lambda(lam: &MultiPartition) -> TypedTableau {
        let init = MultiTableau::initial(lam.composition());
        TypedTableau::type_of(&init, lam.composition())
    }

    /// Standard tableaux of the same shape mapping to this typed tableau.
    pub fn standard_preimages(&self) -> Vec<MultiTableau> {
        MultiTableau::standard(&self.shape)
            .into_iter()
            .filter(|s| &TypedTableau::type_of(s, &self.typ) == self)
            .collect()
    }

    /// The dominance-greatest standard preimage; panics if the maximum is
    /// not unique (it is for semistandard types).
    pub fn first_standard(&self) -> MultiTableau {
        let pre = self.standard_preimages();
        assert!(!pre.is_empty(), "no standard preimage");
        let best = pre
            .iter()
            .find(|c| pre.iter().all(|o| c.dominates(o)))
            .unwrap_or_else(|| panic!("no dominance-greatest preimage"));
        best.clone()
    }

    /// The standard preimage whose coset representative is a distinguished
    /// double-coset representative; panics unless it is unique.
    pub fn dotted_standard(&self) -> MultiTableau {
        let n = self.shape.n();
        let lam_sub = YoungSubgroup::from_parts(n, &self.shape.flat_parts());
        let mu_sub = YoungSubgroup::from_parts(n, &self.typ.flat_parts());
        let mut hits: Vec<MultiTableau> = self
            .standard_preimages()
            .into_iter()
            .filter(|u| {
                let d = u.d_perm();
                lam_sub.is_distinguished(&d) && mu_sub.is_distinguished(&d.inverse())
            })
            .collect();
        assert_eq!(
            hits.len(),
            1,
            "expected a unique distinguished preimage, found {}",
            hits.len()
        );
        hits.pop().unwrap()
    }

    /// Componentwise transpose, boxes and entries, component order kept;
    /// the type is kept.
    pub fn transpose(&self) -> TypedTableau {
        let tshape = self.shape.transpose();
        let mut rows: Vec<Vec<Vec<Option<TypedEntry>>>> = tshape
            .comps()
            .iter()
            .map(|c| c.iter().map(|&len| vec![None; len]).collect())
            .collect();
        for (k, comp) in self.rows.iter().enumerate() {
            for (i, row) in comp.iter().enumerate() {
                for (j, &e) in row.iter().enumerate() {
                    rows[k][j][i] = Some(e);
                }
            }
        }
        let rows = rows
            .into_iter()
            .map(|comp| {
                comp.into_iter()
                    .map(|row| row.into_iter().map(Option::unwrap).collect())
                    .collect()
            })
            .collect();
        TypedTableau {
            shape: tshape,
            typ: self.typ.clone(),
            rows,
        }
    }

    /// T^cs(lambda, mu): lambda-tableaux of type mu whose componentwise
    /// transpose is semistandard with matching component sizes.
    pub fn column_semistandard(lam: &MultiPartition, mu: &MultiComposition) -> Vec<TypedTableau> {
        TypedTableau::t0_plus(&lam.transpose(), mu)
            .into_iter()
            .map(|s| s.transpose())
            .collect()
    }
}

impl fmt::Display for TypedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, comp) in self.rows.iter().enumerate() {
            if k > 0 {
                write!(f, " | ")?;
            }
            if comp.is_empty() {
                write!(f, "-")?;
            }
            for (i, row) in comp.iter().enumerate() {
                if i > 0 {
                    write!(f, " / ")?;
                }
                for (j, e) in row.iter().enumerate() {
                    if j > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", e)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TypedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(comps: &[&[usize]]) -> MultiPartition {
        MultiPartition::new(comps.iter().map(|c| c.to_vec()).collect())
    }

    fn comp(comps: &[&[usize]]) -> MultiComposition {
        MultiComposition::new(comps.iter().map(|c| c.to_vec()).collect())
    }

    #[test]
    fn standard_counts_square_to_group_orders() {
        // Sum over shapes of |Std|^2 equals r^n n!.
        for (r, n, expect) in [(1usize, 3usize, 6usize), (2, 2, 8), (2, 3, 48), (3, 2, 18)] {
            let total: usize = MultiPartition::enumerate(r, n)
                .iter()
                .map(|lam| MultiTableau::standard(lam).len().pow(2))
                .sum();
            assert_eq!(total, expect);
        }
    }

    #[test]
    fn d_perm_round_trip() {
        let mu = comp(&[&[2, 1], &[1]]);
        for t in MultiTableau::row_standard(&mu) {
            let d = t.d_perm();
            assert_eq!(MultiTableau::initial(&mu).act(&d), t);
            let sub = YoungSubgroup::from_parts(4, &mu.flat_parts());
            assert!(sub.is_distinguished(&d));
        }
        assert_eq!(MultiTableau::row_standard(&mu).len(), 24 / 2);
    }

    #[test]
    fn conjugation_of_tableaux() {
        let lam = part(&[&[2, 1], &[1]]);
        for t in MultiTableau::standard(&lam) {
            let c = t.conjugate();
            assert!(c.is_standard());
            assert_eq!(c.conjugate(), t);
        }
    }

    #[test]
    fn tableau_dominance_flips_under_conjugation() {
        for lam in MultiPartition::enumerate(2, 3) {
            let std = MultiTableau::standard(&lam);
            for s in &std {
                for t in &std {
                    assert_eq!(
                        s.dominates(t),
                        t.conjugate().dominates(&s.conjugate()),
                        "{} vs {}",
                        s,
                        t
                    );
                }
            }
        }
    }

    #[test]
    fn initial_tableau_is_dominance_greatest() {
        let lam = part(&[&[2, 1]]);
        let std = MultiTableau::standard(&lam);
        let init = MultiTableau::initial(lam.composition());
        for t in &std {
            assert!(init.dominates(t));
        }
    }

    #[test]
    fn w_lambda_properties() {
        for lam in MultiPartition::enumerate(2, 2)
            .into_iter()
            .chain(MultiPartition::enumerate(1, 3))
        {
            let w = w_lambda(&lam);
            let w_conj = w_lambda(&lam.conjugate());
            assert_eq!(w.inverse(), w_conj, "w_lambda inverts under conjugation");
            for t in MultiTableau::standard(&lam) {
                let d = t.d_perm();
                let d_prime = t.conjugate().d_perm();
                assert_eq!(d.compose(&d_prime.inverse()), w, "{}", t);
                assert_eq!(w.length(), d.length() + d_prime.length());
            }
        }
    }

    #[test]
    fn semistandard_counts_at_two_two() {
        let shapes = MultiPartition::enumerate(2, 2);
        let comps = MultiComposition::enumerate(2, 2);
        // |T_0^+(lambda)| per shape, summed over all types.
        let counts: Vec<usize> = shapes
            .iter()
            .map(|lam| {
                comps
                    .iter()
                    .map(|mu| TypedTableau::t0_plus(lam, mu).len())
                    .sum()
            })
            .collect();
        assert_eq!(counts, vec![2, 1, 1, 2, 1]);
        // The Schur algebra dimension at (2,2).
        let dim: usize = counts.iter().map(|c| c * c).sum();
        assert_eq!(dim, 11);
    }

    #[test]
    fn t0_plus_entries_stay_in_their_component() {
        for lam in MultiPartition::enumerate(2, 3) {
            for mu in MultiComposition::enumerate(2, 3) {
                for s in TypedTableau::t0_plus(&lam, &mu) {
                    for node in lam.nodes() {
                        assert_eq!(
                            s.entry(node).comp,
                            node.0,
                            "entries of component {} must be of that component",
                            node.0
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn type_of_initial_is_t_lambda_and_semistandard() {
        for lam in MultiPartition::enumerate(2, 3) {
            let t = TypedTableau::t_lambda(&lam);
            assert!(t.is_semistandard());
            // Entry at each node is the node's own row class.
            for node in lam.nodes() {
                assert_eq!(t.entry(node), TypedEntry { comp: node.0, row: node.1 });
            }
        }
    }

    #[test]
    fn first_standard_is_unique_maximum() {
        for (r, n) in [(2usize, 2usize), (1, 3)] {
            for lam in MultiPartition::enumerate(r, n) {
                for mu in MultiComposition::enumerate(r, n) {
                    for s in TypedTableau::t0_plus(&lam, &mu) {
                        let first = s.first_standard();
                        let pre = s.standard_preimages();
                        assert!(pre.contains(&first));
                        for o in &pre {
                            assert!(first.dominates(o));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dotted_standard_is_distinguished_and_unique() {
        for (r, n) in [(2usize, 2usize), (1, 3)] {
            for lam in MultiPartition::enumerate(r, n) {
                for mu in MultiComposition::enumerate(r, n) {
                    for s in TypedTableau::column_semistandard(&lam, &mu) {
                        let u = s.dotted_standard();
                        assert_eq!(&TypedTableau::type_of(&u, &mu), &s);
                    }
                }
            }
        }
    }

    #[test]
    fn column_semistandard_counts_match_transposes() {
        for lam in MultiPartition::enumerate(2, 3) {
            for mu in MultiComposition::enumerate(2, 3) {
                assert_eq!(
                    TypedTableau::column_semistandard(&lam, &mu).len(),
                    TypedTableau::t0_plus(&lam.transpose(), &mu).len()
                );
            }
        }
    }

    #[test]
    fn residues_on_a_hook() {
        let lam = part(&[&[2, 1]]);
        let t = MultiTableau::initial(lam.composition());
        // Nodes: (0,0,0)=1, (0,0,1)=2, (0,1,0)=3.
        assert_eq!(t.residue_exponent(1), 0);
        assert_eq!(t.residue_exponent(2), 2);
        assert_eq!(t.residue_exponent(3), -2);
    }
}
