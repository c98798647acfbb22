//! The Yokonuma-Hecke algebra of type A with exact normal-form arithmetic.
//!
//! Elements are stored in the monomial basis t_1^{b_1}...t_n^{b_n} g_w with
//! exponents mod r and scalar coefficients; the representation invariant is
//! that the term map holds no zero coefficients, so equality is structural.
//! Products are computed by appending one braid generator at a time,
//! rewriting with
//!   g_u g_i = g_{u s_i}                            when the word grows,
//!   g_u g_i = g_{u'} + (q - q^{-1}) e_{a,b} g_u    when it shrinks,
//! where u' = u s_i, a = u'^{-1}(i), b = u'^{-1}(i+1), and every e-term is
//! expanded into its r monomials immediately, keeping intermediates in
//! normal form.  Framing generators move through braid generators by
//! g_w t_j = t_{w^{-1}(j)} g_w.
//!
//! Words multiply left to right (matching `Permutation::compose`), and all
//! modules built on top of this are right modules.

use crate::linalg::Echelon;
use crate::perm::{Permutation, YoungSubgroup};
use crate::shapes::{MultiComposition, MultiPartition};
use crate::tableaux::MultiTableau;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};
use ynq_exact::{rat_frac, CycloField, CycloNumber, Scalar};

/// A basis monomial t^beta g_w; beta entries live in 0..r.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub beta: Vec<u8>,
    pub w: Permutation,
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (j, &b) in self.beta.iter().enumerate() {
            if b == 0 {
                continue;
            }
            if wrote {
                write!(f, " ")?;
            }
            wrote = true;
            if b == 1 {
                write!(f, "t{}", j + 1)?;
            } else {
                write!(f, "t{}^{}", j + 1, b)?;
            }
        }
        if !self.w.is_identity() {
            if wrote {
                write!(f, " ")?;
            }
            wrote = true;
            write!(f, "g{}", self.w)?;
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct Inner {
    r: usize,
    n: usize,
    field: CycloField,
    /// zetas[k] = zeta_r^k, so the fixed total order zeta_1, ..., zeta_r on
    /// the r-th roots of unity is zetas[0], ..., zetas[r-1].
    zetas: Vec<CycloNumber>,
    /// q - q^{-1}.
    bracket: Scalar,
    /// (q - q^{-1}) / r, the coefficient of each expanded e-monomial.
    bracket_over_r: Scalar,
    perms: Vec<Permutation>,
    perm_index: BTreeMap<Vec<usize>, usize>,
    cell_m: OnceLock<CellularData>,
    cell_n: OnceLock<CellularData>,
}

/// A handle on the algebra context for fixed r, n and ambient cyclotomic
/// field; clones share everything, including the lazily built cellular
/// data.
#[derive(Clone)]
pub struct Algebra(Arc<Inner>);

impl Algebra {
    /// The ambient field must contain the r-th roots of unity.
    pub fn new(r: usize, n: usize, field: &CycloField) -> Algebra {
        assert!(r >= 1, "r must be positive");
        let zeta = field.root_of_unity(r as u64);
        let mut zetas = Vec::with_capacity(r);
        let mut acc = field.one();
        for _ in 0..r {
            zetas.push(acc.clone());
            acc = acc.mul(&zeta);
        }
        let q = Scalar::q(field);
        let bracket = q.sub(&Scalar::q_pow(field, -1));
        let bracket_over_r = bracket.scale_rat(&rat_frac(1, r as i64));
        let perms = Permutation::all(n);
        let perm_index = perms
            .iter()
            .enumerate()
            .map(|(i, w)| (w.one_line(), i))
            .collect();
        Algebra(Arc::new(Inner {
            r,
            n,
            field: field.clone(),
            zetas,
            bracket,
            bracket_over_r,
            perms,
            perm_index,
            cell_m: OnceLock::new(),
            cell_n: OnceLock::new(),
        }))
    }

    /// Context with the minimal ambient field containing the r-th roots.
    pub fn with_minimal_field(r: usize, n: usize) -> Algebra {
        Algebra::new(r, n, &CycloField::new(r as u64))
    }

    pub fn r(&self) -> usize {
        self.0.r
    }

    pub fn n(&self) -> usize {
        self.0.n
    }

    pub fn field(&self) -> &CycloField {
        &self.0.field
    }

    /// zeta_k in the fixed order, 1-based: zeta_1 = 1.
    pub fn zeta(&self, k: usize) -> &CycloNumber {
        &self.0.zetas[k - 1]
    }

    /// q - q^{-1}.
    pub fn bracket(&self) -> &Scalar {
        &self.0.bracket
    }

    pub fn dim(&self) -> usize {
        self.0.r.pow(self.0.n as u32) * self.0.perms.len()
    }

    pub fn same_context(&self, other: &Algebra) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub fn zero(&self) -> Element {
        Element {
            alg: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn element_from_terms(
        &self,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Element {
        let mut out = self.zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn monomial(&self, beta: Vec<u8>, w: Permutation) -> Element {
        assert_eq!(beta.len(), self.0.n);
        assert_eq!(w.degree(), self.0.n);
        assert!(beta.iter().all(|&b| (b as usize) < self.0.r));
        self.element_from_terms([(Monomial { beta, w }, Scalar::one(&self.0.field))])
    }

    pub fn one(&self) -> Element {
        self.monomial(vec![0; self.0.n], Permutation::identity(self.0.n))
    }

    /// t_j, 1-based.
    pub fn gen_t(&self, j: usize) -> Element {
        assert!((1..=self.0.n).contains(&j), "t index out of range");
        self.t_pow(j, 1)
    }

    /// t_j^k with any integer exponent.
    pub fn t_pow(&self, j: usize, k: i64) -> Element {
        assert!((1..=self.0.n).contains(&j), "t index out of range");
        let mut beta = vec![0u8; self.0.n];
        beta[j - 1] = k.rem_euclid(self.0.r as i64) as u8;
        self.monomial(beta, Permutation::identity(self.0.n))
    }

    /// g_i, 1-based.
    pub fn gen_g(&self, i: usize) -> Element {
        assert!((1..self.0.n).contains(&i), "g index out of range");
        self.g_of(&Permutation::transposition(self.0.n, i))
    }

    /// g_w for any permutation; a single normal-form monomial.
    pub fn g_of(&self, w: &Permutation) -> Element {
        self.monomial(vec![0; self.0.n], w.clone())
    }

    /// e_i = e_{i, i+1}.
    pub fn e(&self, i: usize) -> Element {
        self.e_pair(i, i + 1)
    }

    /// e_{i,k} = (1/r) sum_s t_i^s t_k^{-s}.
    pub fn e_pair(&self, i: usize, k: usize) -> Element {
        assert!((1..=self.0.n).contains(&i) && (1..=self.0.n).contains(&k));
        let r = self.0.r;
        let inv_r = Scalar::from_rat(&self.0.field, rat_frac(1, r as i64));
        let mut out = self.zero();
        for s in 0..r as i64 {
            let m = self.t_pow(i, s).mul(&self.t_pow(k, -s));
            out = out.add(&m.scale(&inv_r));
        }
        out
    }

    /// E_I for a block of positions: the product of e_{i,j} over pairs in
    /// the block.
    pub fn big_e_block(&self, block: &[usize]) -> Element {
        let mut out = self.one();
        for (a, &i) in block.iter().enumerate() {
            for &j in &block[a + 1..] {
                out = out.mul(&self.e_pair(i, j));
            }
        }
        out
    }

    /// E_A for a set partition given as a list of blocks.
    pub fn big_e(&self, blocks: &[Vec<usize>]) -> Element {
        let mut out = self.one();
        for b in blocks {
            out = out.mul(&self.big_e_block(b));
        }
        out
    }

    /// u_lambda: for each nonempty component (ending at position a, with
    /// 1-based component index k), the factor prod_{l != k} (t_a - zeta_l).
    pub fn u_elem(&self, lam: &MultiComposition) -> Element {
        assert_eq!(lam.n(), self.0.n);
        assert_eq!(lam.r(), self.0.r);
        let mut out = self.one();
        for (block, comp) in lam.interval_blocks() {
            let a = *block.last().unwrap();
            for l in 1..=self.0.r {
                if l == comp + 1 {
                    continue;
                }
                let factor = self
                    .gen_t(a)
                    .sub(&self.one().scale(&Scalar::from_cyclo(self.zeta(l).clone())));
                out = out.mul(&factor);
            }
        }
        out
    }

    /// E_{A_lambda} over the interval blocks of lambda.
    pub fn e_of_shape(&self, lam: &MultiComposition) -> Element {
        let blocks: Vec<Vec<usize>> = lam
            .interval_blocks()
            .into_iter()
            .map(|(b, _)| b)
            .collect();
        self.big_e(&blocks)
    }

    /// U_lambda = u_lambda E_{A_lambda}, the common left factor of m_lambda
    /// and n_lambda.
    pub fn u_cap(&self, lam: &MultiComposition) -> Element {
        self.u_elem(lam).mul(&self.e_of_shape(lam))
    }

    /// x_lambda = sum_{w in S_lambda} q^{l(w)} g_w.
    pub fn x_elem(&self, lam: &MultiComposition) -> Element {
        let sub = YoungSubgroup::from_parts(self.0.n, &lam.flat_parts());
        let mut out = self.zero();
        for w in sub.elements() {
            let c = Scalar::q_pow(&self.0.field, w.length() as i64);
            out.add_term(
                Monomial {
                    beta: vec![0; self.0.n],
                    w,
                },
                c,
            );
        }
        out
    }

    /// y_lambda = sum_{w in S_lambda} (-q)^{-l(w)} g_w.
    pub fn y_elem(&self, lam: &MultiComposition) -> Element {
        let sub = YoungSubgroup::from_parts(self.0.n, &lam.flat_parts());
        let mut out = self.zero();
        for w in sub.elements() {
            let l = w.length() as i64;
            let mut c = Scalar::q_pow(&self.0.field, -l);
            if l % 2 == 1 {
                c = c.neg();
            }
            out.add_term(
                Monomial {
                    beta: vec![0; self.0.n],
                    w,
                },
                c,
            );
        }
        out
    }

    /// m_lambda = u_lambda E_{A_lambda} x_lambda.
    pub fn m_elem(&self, lam: &MultiComposition) -> Element {
        self.u_cap(lam).mul(&self.x_elem(lam))
    }

    /// n_lambda = u_lambda E_{A_lambda} y_lambda; equals prime(m_lambda).
    pub fn n_elem(&self, lam: &MultiComposition) -> Element {
        self.u_cap(lam).mul(&self.y_elem(lam))
    }

    /// m_st = g_{d(s)}* m_lambda g_{d(t)} for row-standard tableaux of a
    /// common shape.
    pub fn cellular_m(&self, s: &MultiTableau, t: &MultiTableau) -> Element {
        assert_eq!(s.shape(), t.shape(), "tableaux must share their shape");
        let left = self.g_of(&s.d_perm().inverse());
        let right = self.g_of(&t.d_perm());
        left.mul(&self.m_elem(s.shape())).mul(&right)
    }

    /// n_st = g_{d(s)}* n_lambda g_{d(t)}.
    pub fn cellular_n(&self, s: &MultiTableau, t: &MultiTableau) -> Element {
        assert_eq!(s.shape(), t.shape(), "tableaux must share their shape");
        let left = self.g_of(&s.d_perm().inverse());
        let right = self.g_of(&t.d_perm());
        left.mul(&self.n_elem(s.shape())).mul(&right)
    }

    /// Jucys-Murphy element: J_1 = 1, J_i = g_{i-1} J_{i-1} g_{i-1}.
    pub fn jm(&self, i: usize) -> Element {
        assert!((1..=self.0.n).contains(&i));
        let mut out = self.one();
        for k in 1..i {
            let g = self.gen_g(k);
            out = g.mul(&out).mul(&g);
        }
        out
    }

    /// The residue q^{2(j-i)} of the node holding `value` in t.
    pub fn residue(&self, t: &MultiTableau, value: usize) -> Scalar {
        Scalar::q_pow(&self.0.field, t.residue_exponent(value))
    }

    /// The seminormal idempotent-like element F_t: over every position k
    /// and every standard tableau s of any shape whose residue at k differs
    /// from t's, the factor (J_k - res_s(k)) / (res_t(k) - res_s(k)).
    pub fn seminormal_f(&self, t: &MultiTableau) -> Element {
        let mut all_std: Vec<MultiTableau> = Vec::new();
        for lam in MultiPartition::enumerate(self.0.r, self.0.n) {
            all_std.extend(MultiTableau::standard(&lam));
        }
        let mut out = self.one();
        for k in 1..=self.0.n {
            let jk = self.jm(k);
            let res_t = self.residue(t, k);
            for s in &all_std {
                let res_s = self.residue(s, k);
                if res_s == res_t {
                    continue;
                }
                let denom = res_t.sub(&res_s);
                let factor = jk
                    .sub(&self.one().scale(&res_s))
                    .scale(&denom.inv().expect("distinct generic residues"));
                out = out.mul(&factor);
            }
        }
        out
    }

    /// f_st = F_s m_st F_t.
    pub fn seminormal_m(&self, s: &MultiTableau, t: &MultiTableau) -> Element {
        self.seminormal_f(s)
            .mul(&self.cellular_m(s, t))
            .mul(&self.seminormal_f(t))
    }

    /// g_st = F_{s'} n_st F_{t'}, priming by componentwise transposition.
    pub fn seminormal_n(&self, s: &MultiTableau, t: &MultiTableau) -> Element {
        self.seminormal_f(&s.transpose())
            .mul(&self.cellular_n(s, t))
            .mul(&self.seminormal_f(&t.transpose()))
    }

    /// tau(t^beta g_w) = 1 exactly when beta = 0 and w = 1, extended
    /// linearly; a trace form on the algebra.
    pub fn tau(&self, a: &Element) -> Scalar {
        a.coeff(&Monomial {
            beta: vec![0; self.0.n],
            w: Permutation::identity(self.0.n),
        })
    }

    /// <a, b> = tau(a b*).
    pub fn tau_pairing(&self, a: &Element, b: &Element) -> Scalar {
        self.tau(&a.mul(&b.star()))
    }

    /// The ordered monomial basis; index = beta (big-endian base r) major,
    /// permutation (one-line lex) minor.
    pub fn monomials(&self) -> Vec<Monomial> {
        let mut out = Vec::with_capacity(self.dim());
        let mut beta = vec![0u8; self.0.n];
        loop {
            for w in &self.0.perms {
                out.push(Monomial {
                    beta: beta.clone(),
                    w: w.clone(),
                });
            }
            // Increment big-endian base-r counter.
            let mut j = self.0.n;
            loop {
                if j == 0 {
                    return out;
                }
                j -= 1;
                if (beta[j] as usize) + 1 < self.0.r {
                    beta[j] += 1;
                    beta[j + 1..].fill(0);
                    break;
                }
            }
        }
    }

    pub fn monomial_index(&self, m: &Monomial) -> usize {
        let mut b = 0usize;
        for &x in &m.beta {
            b = b * self.0.r + x as usize;
        }
        b * self.0.perms.len() + self.0.perm_index[&m.w.one_line()]
    }

    /// Inverse of `Element::to_vec` over the ordered monomial basis.
    pub fn element_from_vec(&self, v: &[Scalar]) -> Element {
        assert_eq!(v.len(), self.dim());
        self.element_from_terms(
            self.monomials()
                .into_iter()
                .zip(v.iter().cloned())
                .filter(|(_, c)| !c.is_zero()),
        )
    }

    pub fn cell_data(&self, flavor: Flavor) -> &CellularData {
        let slot = match flavor {
            Flavor::M => &self.0.cell_m,
            Flavor::N => &self.0.cell_n,
        };
        slot.get_or_init(|| CellularData::build(self, flavor))
    }

    /// Expands an element over the chosen cellular basis; exact and unique.
    pub fn expand_cellular(&self, a: &Element, flavor: Flavor) -> CellularExpansion {
        let data = self.cell_data(flavor);
        let coords = data
            .ech
            .coords(a.to_vec())
            .expect("cellular basis spans the algebra");
        let mut terms = Vec::new();
        for (i, c) in coords.into_iter().enumerate() {
            if !c.is_zero() {
                terms.push((i, c));
            }
        }
        CellularExpansion { flavor, terms }
    }

    /// Whether a lies in the span of cellular elements of shapes strictly
    /// dominating mu.
    pub fn in_higher_ideal(&self, a: &Element, mu: &MultiPartition, flavor: Flavor) -> bool {
        let data = self.cell_data(flavor);
        self.expand_cellular(a, flavor)
            .terms
            .iter()
            .all(|(i, _)| data.shape_of(*i).strictly_dominates(mu))
    }
}

/// Which cellular basis: the m-flavor or its prime image.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Flavor {
    M,
    N,
}

/// Position of a cellular basis element: shape index into the canonical
/// shape enumeration, and indices of the two standard tableaux.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct CellIndex {
    pub shape_idx: usize,
    pub s_idx: usize,
    pub t_idx: usize,
}

pub struct CellularData {
    pub flavor: Flavor,
    pub shapes: Vec<MultiPartition>,
    pub std_tabs: Vec<Vec<MultiTableau>>,
    pub indices: Vec<CellIndex>,
    pub elements: Vec<Element>,
    ech: Echelon,
}

impl CellularData {
    fn build(alg: &Algebra, flavor: Flavor) -> CellularData {
        let shapes = MultiPartition::enumerate(alg.r(), alg.n());
        let std_tabs: Vec<Vec<MultiTableau>> =
            shapes.iter().map(MultiTableau::standard).collect();
        let mut indices = Vec::new();
        let mut elements = Vec::new();
        let mut ech = Echelon::new(alg.field(), alg.dim());
        for (shape_idx, tabs) in std_tabs.iter().enumerate() {
            for (s_idx, s) in tabs.iter().enumerate() {
                for (t_idx, t) in tabs.iter().enumerate() {
                    let el = match flavor {
                        Flavor::M => alg.cellular_m(s, t),
                        Flavor::N => alg.cellular_n(s, t),
                    };
                    let fresh = ech.insert(el.to_vec());
                    assert!(fresh, "cellular elements must be linearly independent");
                    indices.push(CellIndex {
                        shape_idx,
                        s_idx,
                        t_idx,
                    });
                    elements.push(el);
                }
            }
        }
        assert_eq!(elements.len(), alg.dim(), "cellular basis must span");
        CellularData {
            flavor,
            shapes,
            std_tabs,
            indices,
            elements,
            ech,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn shape_of(&self, i: usize) -> &MultiPartition {
        &self.shapes[self.indices[i].shape_idx]
    }

    pub fn tableaux_of(&self, i: usize) -> (&MultiTableau, &MultiTableau) {
        let ci = self.indices[i];
        (
            &self.std_tabs[ci.shape_idx][ci.s_idx],
            &self.std_tabs[ci.shape_idx][ci.t_idx],
        )
    }

    pub fn position(&self, shape_idx: usize, s_idx: usize, t_idx: usize) -> usize {
        self.indices
            .binary_search(&CellIndex {
                shape_idx,
                s_idx,
                t_idx,
            })
            .expect("index present")
    }
}

/// A sparse expansion over a cellular basis: (position, coefficient) pairs
/// in basis order.
#[derive(Clone, Debug)]
pub struct CellularExpansion {
    pub flavor: Flavor,
    pub terms: Vec<(usize, Scalar)>,
}

/// An element of the algebra in normal form.
#[derive(Clone)]
pub struct Element {
    alg: Algebra,
    terms: BTreeMap<Monomial, Scalar>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Element) -> bool {
        self.terms == other.terms
    }
}

impl Eq for Element {}

impl Element {
    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.alg.field()))
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Element {
        Element {
            alg: self.alg.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return self.alg.zero();
        }
        Element {
            alg: self.alg.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.mul(c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Element) -> Element {
        debug_assert!(self.alg.same_context(&other.alg));
        let alg = &self.alg;
        let r = alg.r();
        let n = alg.n();
        let mut out = alg.zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1.mul(c2);
                // t-part of the right factor moves through g_{w1}.
                let mut beta = m1.beta.clone();
                for j in 1..=n {
                    let moved = m2.beta[m1.w.apply(j) - 1];
                    beta[j - 1] = ((beta[j - 1] as usize + moved as usize) % r) as u8;
                }
                // Append the braid word of w2 letter by letter.
                let mut cur: BTreeMap<Monomial, Scalar> = BTreeMap::new();
                cur.insert(
                    Monomial {
                        beta,
                        w: m1.w.clone(),
                    },
                    c,
                );
                for &i in &m2.w.reduced_word() {
                    let mut next: BTreeMap<Monomial, Scalar> = BTreeMap::new();
                    let mut push = |m: Monomial, c: Scalar| {
                        if c.is_zero() {
                            return;
                        }
                        match next.entry(m) {
                            std::collections::btree_map::Entry::Vacant(e) => {
                                e.insert(c);
                            }
                            std::collections::btree_map::Entry::Occupied(mut e) => {
                                let s = e.get().add(&c);
                                if s.is_zero() {
                                    e.remove();
                                } else {
                                    *e.get_mut() = s;
                                }
                            }
                        }
                    };
                    for (m, c) in cur {
                        let si = Permutation::transposition(n, i);
                        if !m.w.has_right_descent(i) {
                            push(
                                Monomial {
                                    beta: m.beta,
                                    w: m.w.compose(&si),
                                },
                                c,
                            );
                        } else {
                            let shorter = m.w.compose(&si);
                            push(
                                Monomial {
                                    beta: m.beta.clone(),
                                    w: shorter.clone(),
                                },
                                c.clone(),
                            );
                            let inv = shorter.inverse();
                            let a = inv.apply(i) - 1;
                            let b = inv.apply(i + 1) - 1;
                            let cc = c.mul(&alg.0.bracket_over_r);
                            for s in 0..r {
                                let mut beta2 = m.beta.clone();
                                beta2[a] = ((beta2[a] as usize + s) % r) as u8;
                                beta2[b] = ((beta2[b] as usize + r - s) % r) as u8;
                                push(
                                    Monomial {
                                        beta: beta2,
                                        w: m.w.clone(),
                                    },
                                    cc.clone(),
                                );
                            }
                        }
                    }
                    cur = next;
                }
                for (m, c) in cur {
                    out.add_term(m, c);
                }
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Element {
        let mut out = self.alg.one();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// The anti-automorphism fixing every t_j and g_i:
    /// (t^beta g_w)* = t^{beta o w^{-1}} g_{w^{-1}}.
    pub fn star(&self) -> Element {
        let n = self.alg.n();
        let mut out = self.alg.zero();
        for (m, c) in &self.terms {
            let winv = m.w.inverse();
            let mut beta = vec![0u8; n];
            for j in 1..=n {
                beta[j - 1] = m.beta[winv.apply(j) - 1];
            }
            out.add_term(Monomial { beta, w: winv }, c.clone());
        }
        out
    }

    /// The ring involution fixing every generator and sending q to -q^{-1}
    /// on coefficients.
    pub fn prime(&self) -> Element {
        Element {
            alg: self.alg.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.bar_involution()))
                .collect(),
        }
    }

    /// Dense coordinates over the ordered monomial basis.
    pub fn to_vec(&self) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(self.alg.field()); self.alg.dim()];
        for (m, c) in &self.terms {
            v[self.alg.monomial_index(m)] = c.clone();
        }
        v
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({}) {}", c, m)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Serialization form of an element: one record per term, the permutation
/// stored as its lexicographically least reduced word (1-based letters).
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ElementRepr {
    pub terms: Vec<TermRepr>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct TermRepr {
    pub beta: Vec<u8>,
    pub word: Vec<usize>,
    pub coeff: ynq_exact::ScalarRepr,
}

impl Element {
    pub fn to_repr(&self) -> ElementRepr {
        ElementRepr {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermRepr {
                    beta: m.beta.clone(),
                    word: m.w.reduced_word(),
                    coeff: c.to_repr(),
                })
                .collect(),
        }
    }

    pub fn from_repr(alg: &Algebra, repr: &ElementRepr) -> Result<Element, ynq_exact::ExactError> {
        let mut out = alg.zero();
        for t in &repr.terms {
            let w = Permutation::from_word(alg.n(), &t.word);
            out.add_term(
                Monomial {
                    beta: t.beta.clone(),
                    w,
                },
                Scalar::from_repr(alg.field(), &t.coeff)?,
            );
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg22() -> Algebra {
        Algebra::with_minimal_field(2, 2)
    }

    fn alg13() -> Algebra {
        Algebra::with_minimal_field(1, 3)
    }

    #[test]
    fn quadratic_relation_at_two_two() {
        let y = alg22();
        let g1 = y.gen_g(1);
        let sq = g1.mul(&g1);
        // g_1^2 = 1 + (q - q^{-1}) e_1 g_1 with e_1 = (1 + t_1 t_2)/2.
        let expect = y
            .one()
            .add(&y.e(1).mul(&g1).scale(y.bracket()));
        assert_eq!(sq, expect);
        let half = rat_frac(1, 2);
        let direct = y.one().add(
            &y.gen_g(1)
                .add(&y.gen_t(1).mul(&y.gen_t(2)).mul(&y.gen_g(1)))
                .scale(&y.bracket().scale_rat(&half)),
        );
        assert_eq!(sq, direct);
    }

    #[test]
    fn inverse_formula() {
        for y in [alg22(), Algebra::with_minimal_field(3, 2)] {
            let g1 = y.gen_g(1);
            let ginv = g1.sub(&y.e(1).scale(y.bracket()));
            assert_eq!(g1.mul(&ginv), y.one());
            assert_eq!(ginv.mul(&g1), y.one());
        }
    }

    #[test]
    fn defining_relations_exhaustive_small() {
        for y in [Algebra::with_minimal_field(2, 3), alg13()] {
            let n = y.n();
            for i in 1..n {
                for j in 1..n {
                    let gi = y.gen_g(i);
                    let gj = y.gen_g(j);
                    if i.abs_diff(j) >= 2 {
                        assert_eq!(gi.mul(&gj), gj.mul(&gi));
                    }
                    if j == i + 1 {
                        assert_eq!(
                            gi.mul(&gj).mul(&gi),
                            gj.mul(&gi).mul(&gj),
                            "braid at ({}, {})",
                            i,
                            j
                        );
                    }
                }
                for j in 1..=n {
                    let lhs = y.gen_g(i).mul(&y.gen_t(j));
                    let sj = if j == i {
                        i + 1
                    } else if j == i + 1 {
                        i
                    } else {
                        j
                    };
                    let rhs = y.gen_t(sj).mul(&y.gen_g(i));
                    assert_eq!(lhs, rhs, "commutation g_{} t_{}", i, j);
                }
            }
            for j in 1..=n {
                assert_eq!(y.gen_t(j).pow(y.r()), y.one());
            }
        }
    }

    #[test]
    fn e_elements_are_idempotent() {
        let y = alg22();
        let e1 = y.e(1);
        assert_eq!(e1.mul(&e1), e1);
        let y32 = Algebra::with_minimal_field(3, 2);
        let e = y32.e_pair(1, 2);
        assert_eq!(e.mul(&e), e);
        let big = y32.big_e(&[vec![1, 2]]);
        assert_eq!(big.mul(&big), big);
    }

    #[test]
    fn associativity_on_deterministic_triples() {
        let y = Algebra::with_minimal_field(2, 3);
        let els = [
            y.gen_g(1),
            y.gen_g(2),
            y.gen_t(1).mul(&y.gen_g(1)),
            y.gen_g(1).mul(&y.gen_g(2)).mul(&y.gen_g(1)),
            y.e(1).mul(&y.gen_g(2)),
        ];
        for a in &els {
            for b in &els {
                for c in &els {
                    assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
                }
            }
        }
    }

    #[test]
    fn star_is_an_anti_automorphism() {
        let y = Algebra::with_minimal_field(2, 3);
        let a = y.gen_g(1).mul(&y.gen_g(2)).add(&y.gen_t(2));
        let b = y.gen_g(2).mul(&y.gen_t(1)).add(&y.e(1));
        assert_eq!(a.mul(&b).star(), b.star().mul(&a.star()));
        assert_eq!(a.star().star(), a);
        // g_{s1 s2}* = g_{(s1 s2)^{-1}} = g_{s2 s1}.
        let w = Permutation::from_word(3, &[1, 2]);
        assert_eq!(y.g_of(&w).star(), y.g_of(&w.inverse()));
    }

    #[test]
    fn prime_is_a_ring_involution() {
        let y = alg22();
        let a = y.gen_g(1).scale(&Scalar::q(y.field())).add(&y.gen_t(1));
        let b = y.e(1).mul(&y.gen_g(1));
        assert_eq!(a.mul(&b).prime(), a.prime().mul(&b.prime()));
        assert_eq!(a.prime().prime(), a);
        // x_mu turns into y_mu.
        let mu = MultiComposition::new(vec![vec![1, 1], vec![]]);
        assert_eq!(y.x_elem(&mu).prime(), y.y_elem(&mu));
        assert_eq!(y.m_elem(&mu).prime(), y.n_elem(&mu));
    }

    #[test]
    fn m_element_examples() {
        let y = alg22();
        // lambda = ((1),(1)): u = (t_1 + 1)(t_2 - 1), E trivial blocks, x = 1.
        let lam = MultiComposition::new(vec![vec![1], vec![1]]);
        let t1 = y.gen_t(1);
        let t2 = y.gen_t(2);
        let expect = t1
            .add(&y.one())
            .mul(&t2.sub(&y.one()));
        assert_eq!(y.m_elem(&lam), expect);
        // x for ((2), -) is 1 + q g_1.
        let lam2 = MultiComposition::new(vec![vec![2], vec![]]);
        let x = y.x_elem(&lam2);
        assert_eq!(
            x,
            y.one().add(&y.gen_g(1).scale(&Scalar::q(y.field())))
        );
    }

    #[test]
    fn m_lambda_eigenvector_properties() {
        // m_lambda t_i = zeta_{p(i)} m_lambda and m_lambda g_w = q^{l(w)}
        // m_lambda for w in the row stabiliser.
        let y = alg22();
        for lam in MultiComposition::enumerate(2, 2) {
            let m = y.m_elem(&lam);
            assert!(!m.is_zero());
            let init = MultiTableau::initial(&lam);
            for i in 1..=2 {
                let comp = init.position_of(i).0;
                let zeta = Scalar::from_cyclo(y.zeta(comp + 1).clone());
                assert_eq!(m.mul(&y.gen_t(i)), m.scale(&zeta), "{} t_{}", lam, i);
            }
            let sub = YoungSubgroup::from_parts(2, &lam.flat_parts());
            for w in sub.elements() {
                let q_pow = Scalar::q_pow(y.field(), w.length() as i64);
                assert_eq!(m.mul(&y.g_of(&w)), m.scale(&q_pow));
            }
        }
    }

    #[test]
    fn jm_elements_commute_and_start_trivially() {
        let y = alg13();
        assert_eq!(y.jm(1), y.one());
        assert_eq!(y.jm(2), y.gen_g(1).pow(2));
        let j2 = y.jm(2);
        let j3 = y.jm(3);
        assert_eq!(j2.mul(&j3), j3.mul(&j2));
    }

    #[test]
    fn tau_is_a_trace() {
        let y = alg22();
        assert_eq!(y.tau(&y.one()), Scalar::one(y.field()));
        assert!(y.tau(&y.gen_t(1)).is_zero());
        assert!(y.tau(&y.gen_g(1)).is_zero());
        // tau(g_1 g_1) = 1: the quadratic relation contributes no identity
        // term beyond 1.
        assert_eq!(y.tau(&y.gen_g(1).pow(2)), Scalar::one(y.field()));
        let els = [
            y.gen_g(1),
            y.gen_t(1),
            y.gen_t(2).mul(&y.gen_g(1)),
            y.e(1),
        ];
        for a in &els {
            for b in &els {
                assert_eq!(y.tau(&a.mul(b)), y.tau(&b.mul(a)));
            }
            assert_eq!(y.tau(&a.star()), y.tau(a));
        }
    }

    #[test]
    fn cellular_bases_are_bases() {
        for (alg, dim) in [(alg22(), 8), (alg13(), 6)] {
            let data = alg.cell_data(Flavor::M);
            assert_eq!(data.len(), dim);
            let data_n = alg.cell_data(Flavor::N);
            assert_eq!(data_n.len(), dim);
        }
    }

    #[test]
    fn cellular_expansion_round_trip() {
        let y = alg22();
        let data = y.cell_data(Flavor::M);
        // A basis element expands to itself.
        let exp = y.expand_cellular(&data.elements[3], Flavor::M);
        assert_eq!(exp.terms.len(), 1);
        assert_eq!(exp.terms[0].0, 3);
        assert!(exp.terms[0].1.is_one());
        // A product expands exactly and reassembles.
        let a = y.gen_g(1).mul(&y.gen_t(1)).add(&y.one());
        let exp = y.expand_cellular(&a, Flavor::M);
        let mut back = y.zero();
        for (i, c) in &exp.terms {
            back = back.add(&data.elements[*i].scale(c));
        }
        assert_eq!(back, a);
    }

    #[test]
    fn n_basis_is_prime_of_m_basis() {
        let y = alg22();
        for lam in MultiPartition::enumerate(2, 2) {
            for s in MultiTableau::standard(&lam) {
                for t in MultiTableau::standard(&lam) {
                    assert_eq!(y.cellular_m(&s, &t).prime(), y.cellular_n(&s, &t));
                    assert_eq!(y.cellular_m(&s, &t).star(), y.cellular_m(&t, &s));
                }
            }
        }
    }

    #[test]
    fn cellular_pairing_is_unitriangular() {
        // tau(m_st n_uv) vanishes unless the transposed shape of u
        // dominates the shape of s, and on a common shape unless u'
        // dominates t and v' dominates s; at u = t', v = s' the value is
        // invertible.
        let y = alg22();
        let shapes = MultiPartition::enumerate(2, 2);
        for lam in &shapes {
            let sm = MultiTableau::standard(lam);
            for nu in &shapes {
                let sn = MultiTableau::standard(nu);
                for s in &sm {
                    for t in &sm {
                        for u in &sn {
                            for v in &sn {
                                let p = y.tau(&y.cellular_m(s, t).mul(&y.cellular_n(u, v)));
                                if nu.transpose() != *lam {
                                    assert!(
                                        p.is_zero() || nu.transpose().strictly_dominates(lam),
                                        "off-shape pairing at {} vs {}",
                                        lam,
                                        nu
                                    );
                                    continue;
                                }
                                let diagonal = u.transpose() == *t && v.transpose() == *s;
                                if diagonal {
                                    assert!(!p.is_zero() && p.inv().is_ok(), "at {}", lam);
                                } else {
                                    assert!(
                                        p.is_zero()
                                            || (u.transpose().dominates(t)
                                                && v.transpose().dominates(s)),
                                        "pairing not triangular at {}",
                                        lam
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn element_serialization_round_trip() {
        let y = alg22();
        let a = y
            .gen_g(1)
            .mul(&y.gen_t(1))
            .scale(&Scalar::q_pow(y.field(), -2))
            .add(&y.e(1));
        let repr = a.to_repr();
        let back = Element::from_repr(&y, &repr).unwrap();
        assert_eq!(a, back);
        let json = serde_json::to_string(&repr).unwrap();
        let repr2: ElementRepr = serde_json::from_str(&json).unwrap();
        assert_eq!(Element::from_repr(&y, &repr2).unwrap(), a);
    }
}
