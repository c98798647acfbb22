//! Right modules over the Yokonuma-Hecke algebra given by exact action
//! matrices: permutation modules with their three bases, Specht and dual
//! Specht modules, Gram forms with radicals under specialization,
//! contragredient duals, homomorphism spaces, filtrations, and
//! decomposition numbers computed on the Hecke side.
//!
//! Vectors are rows and generators act by right multiplication, so the
//! matrix of a product is the product of the matrices in the same order.
//! A module can be presented abstractly (`RightModule`, just the action
//! matrices) or as an explicit subspace of the algebra (`EmbeddedModule`,
//! which also remembers the spanning elements and can re-expand arbitrary
//! algebra elements in its basis).

use crate::algebra::{Algebra, Element, Flavor, Monomial};
use crate::linalg::{Echelon, Matrix};
use crate::perm::{double_coset_reps, YoungSubgroup};
use crate::shapes::{MultiComposition, MultiPartition};
use crate::tableaux::{MultiTableau, TypedTableau};
use std::collections::BTreeSet;
use ynq_exact::{ExactError, Scalar, Specialization};

/// A right module presented by the action matrices of the generators,
/// remembering which specialization of the ground ring its entries live
/// over (`Generic` until `specialize` is applied).
#[derive(Clone)]
pub struct RightModule {
    alg: Algebra,
    name: String,
    over: Specialization,
    labels: Vec<String>,
    t_action: Vec<Matrix>,
    g_action: Vec<Matrix>,
}

impl RightModule {
    pub fn new(
        alg: &Algebra,
        name: String,
        labels: Vec<String>,
        t_action: Vec<Matrix>,
        g_action: Vec<Matrix>,
    ) -> RightModule {
        let d = labels.len();
        assert_eq!(t_action.len(), alg.n());
        assert_eq!(g_action.len(), alg.n().saturating_sub(1));
        for m in t_action.iter().chain(g_action.iter()) {
            assert_eq!((m.rows(), m.cols()), (d, d));
        }
        RightModule {
            alg: alg.clone(),
            name,
            over: Specialization::Generic,
            labels,
            t_action,
            g_action,
        }
    }

    pub fn over(&self) -> Specialization {
        self.over
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// Action matrix of t_j, 1-based.
    pub fn act_t(&self, j: usize) -> &Matrix {
        &self.t_action[j - 1]
    }

    /// Action matrix of g_i, 1-based.
    pub fn act_g(&self, i: usize) -> &Matrix {
        &self.g_action[i - 1]
    }

    pub fn act_monomial(&self, m: &Monomial) -> Matrix {
        let mut out = Matrix::identity(self.alg.field(), self.dim());
        for (j, &b) in m.beta.iter().enumerate() {
            for _ in 0..b {
                out = out.mul(&self.t_action[j]);
            }
        }
        for &i in &m.w.reduced_word() {
            out = out.mul(&self.g_action[i - 1]);
        }
        out
    }

    pub fn act_element(&self, a: &Element) -> Matrix {
        let mut out = Matrix::zero(self.alg.field(), self.dim(), self.dim());
        for (m, c) in a.terms() {
            out = out.add(&self.act_monomial(m).scale(c));
        }
        out
    }

    /// Checks every defining relation of the algebra as a matrix identity.
    pub fn relations_hold(&self) -> bool {
        let n = self.alg.n();
        let r = self.alg.r();
        let d = self.dim();
        let id = Matrix::identity(self.alg.field(), d);
        let ts = &self.t_action;
        let gs = &self.g_action;
        for a in 0..n {
            for b in 0..n {
                if ts[a].mul(&ts[b]) != ts[b].mul(&ts[a]) {
                    return false;
                }
            }
            let mut pow = id.clone();
            for _ in 0..r {
                pow = pow.mul(&ts[a]);
            }
            if pow != id {
                return false;
            }
        }
        for i in 1..n {
            for j in 1..n {
                if i.abs_diff(j) >= 2 && gs[i - 1].mul(&gs[j - 1]) != gs[j - 1].mul(&gs[i - 1]) {
                    return false;
                }
                if j == i + 1 {
                    let lhs = gs[i - 1].mul(&gs[j - 1]).mul(&gs[i - 1]);
                    let rhs = gs[j - 1].mul(&gs[i - 1]).mul(&gs[j - 1]);
                    if lhs != rhs {
                        return false;
                    }
                }
            }
            for j in 1..=n {
                let sj = if j == i {
                    i + 1
                } else if j == i + 1 {
                    i
                } else {
                    j
                };
                if gs[i - 1].mul(&ts[j - 1]) != ts[sj - 1].mul(&gs[i - 1]) {
                    return false;
                }
            }
            // g_i^2 = 1 + (q - q^{-1}) e_i g_i with e_i expanded from the
            // t-action matrices.
            let mut e = Matrix::zero(self.alg.field(), d, d);
            for s in 0..r {
                let mut term = id.clone();
                for _ in 0..s {
                    term = term.mul(&ts[i - 1]);
                }
                for _ in 0..((r - s) % r) {
                    term = term.mul(&ts[i]);
                }
                e = e.add(&term);
            }
            let e = e.scale(&Scalar::from_rat(
                self.alg.field(),
                ynq_exact::rat_frac(1, r as i64),
            ));
                let bracket = self
                .over
                .apply(self.alg.bracket())
                .expect("bracket has no pole");
            let rhs = id.add(&e.mul(&gs[i - 1]).scale(&bracket));
            if gs[i - 1].mul(&gs[i - 1]) != rhs {
                return false;
            }
        }
        true
    }

    /// The contragredient dual: same underlying space, action of each
    /// generator transposed (the generators are fixed by the *
    /// anti-automorphism).
    pub fn dual(&self) -> RightModule {
        RightModule {
            alg: self.alg.clone(),
            name: format!("{}*", self.name),
            over: self.over,
            labels: self.labels.clone(),
            t_action: self.t_action.iter().map(Matrix::transpose).collect(),
            g_action: self.g_action.iter().map(Matrix::transpose).collect(),
        }
    }

    pub fn specialize(&self, spec: Specialization) -> Result<RightModule, ExactError> {
        let map = |m: &Matrix| -> Result<Matrix, ExactError> {
            let mut rows = Vec::with_capacity(m.rows());
            for i in 0..m.rows() {
                let mut row = Vec::with_capacity(m.cols());
                for j in 0..m.cols() {
                    row.push(spec.apply(m.get(i, j))?);
                }
                rows.push(row);
            }
            Ok(Matrix::from_rows(self.alg.field(), rows))
        };
        let t_action = self.t_action.iter().map(&map).collect::<Result<_, _>>()?;
        let g_action = self.g_action.iter().map(&map).collect::<Result<_, _>>()?;
        Ok(RightModule {
            alg: self.alg.clone(),
            name: self.name.clone(),
            over: spec,
            labels: self.labels.clone(),
            t_action,
            g_action,
        })
    }
}

/// A right module sitting inside the algebra: spanning elements plus the
/// abstract module they generate.
pub struct EmbeddedModule {
    pub module: RightModule,
    pub elements: Vec<Element>,
    ech: Echelon,
}

impl EmbeddedModule {
    /// The elements must be linearly independent and their span must be
    /// closed under the right action.
    pub fn from_elements(
        alg: &Algebra,
        name: String,
        labels: Vec<String>,
        elements: Vec<Element>,
    ) -> EmbeddedModule {
        let mut ech = Echelon::new(alg.field(), alg.dim());
        for e in &elements {
            let fresh = ech.insert(e.to_vec());
            assert!(fresh, "spanning elements must be linearly independent");
        }
        let gens = generator_elements(alg);
        let mut mats = Vec::with_capacity(gens.len());
        for g in &gens {
            let rows: Vec<Vec<Scalar>> = elements
                .iter()
                .map(|e| {
                    ech.coords(e.mul(g).to_vec())
                        .expect("span must be closed under the action")
                })
                .collect();
            mats.push(Matrix::from_rows(alg.field(), rows));
        }
        let g_action = mats.split_off(alg.n());
        let module = RightModule::new(alg, name, labels, mats, g_action);
        EmbeddedModule {
            module,
            elements,
            ech,
        }
    }

    /// Coordinates of an algebra element over the module basis, if it lies
    /// in the module.
    pub fn coords(&self, e: &Element) -> Option<Vec<Scalar>> {
        self.ech.coords(e.to_vec())
    }
}

/// The generators t_1..t_n, g_1..g_{n-1} as elements, in the order used by
/// every action-matrix list.
pub fn generator_elements(alg: &Algebra) -> Vec<Element> {
    let mut gens = Vec::new();
    for j in 1..=alg.n() {
        gens.push(alg.gen_t(j));
    }
    for i in 1..alg.n() {
        gens.push(alg.gen_g(i));
    }
    gens
}

/// M^mu = m_mu Y with basis {m_mu g_d : d distinguished for S_mu}.
pub fn perm_module(alg: &Algebra, mu: &MultiComposition) -> EmbeddedModule {
    cyclic_module(alg, format!("M^{}", mu), &alg.m_elem(mu), mu)
}

/// N^mu = n_mu Y with basis {n_mu g_d}.
pub fn n_perm_module(alg: &Algebra, mu: &MultiComposition) -> EmbeddedModule {
    cyclic_module(alg, format!("N^{}", mu), &alg.n_elem(mu), mu)
}

fn cyclic_module(
    alg: &Algebra,
    name: String,
    generator: &Element,
    mu: &MultiComposition,
) -> EmbeddedModule {
    let sub = YoungSubgroup::from_parts(alg.n(), &mu.flat_parts());
    let reps = sub.coset_reps();
    assert!(reps[0].is_identity());
    let labels = reps.iter().map(|d| format!("d={}", d)).collect();
    let elements = reps.iter().map(|d| generator.mul(&alg.g_of(d))).collect();
    EmbeddedModule::from_elements(alg, name, labels, elements)
}

/// The whole algebra as a right module over itself, in the monomial basis.
pub fn regular_module(alg: &Algebra) -> EmbeddedModule {
    let monos = alg.monomials();
    let labels = monos.iter().map(|m| format!("{}", m)).collect();
    let elements = monos
        .into_iter()
        .map(|m| alg.element_from_terms([(m, Scalar::one(alg.field()))]))
        .collect();
    EmbeddedModule::from_elements(alg, "Y".to_string(), labels, elements)
}

/// The cell module of a shape: basis indexed by standard tableaux, action
/// computed by cellular expansion and truncation.  The m-flavor gives the
/// Specht module S^lambda, the n-flavor its dual-Specht companion.
pub fn cell_module(alg: &Algebra, lam: &MultiPartition, flavor: Flavor) -> RightModule {
    let data = alg.cell_data(flavor);
    let shape_idx = data
        .shapes
        .iter()
        .position(|s| s == lam)
        .expect("shape of the right size");
    let tabs = &data.std_tabs[shape_idx];
    assert!(tabs[0].d_perm().is_identity());
    let dim = tabs.len();
    let gens = generator_elements(alg);
    let mut mats = Vec::with_capacity(gens.len());
    for g in &gens {
        let mut rows = Vec::with_capacity(dim);
        for k in 0..dim {
            let full = data.elements[data.position(shape_idx, 0, k)].mul(g);
            let mut row = vec![Scalar::zero(alg.field()); dim];
            for (i, c) in alg.expand_cellular(&full, flavor).terms {
                let ci = data.indices[i];
                if ci.shape_idx == shape_idx {
                    assert_eq!(ci.s_idx, 0, "cell action fixes the row tableau");
                    row[ci.t_idx] = c;
                } else {
                    assert!(
                        data.shapes[ci.shape_idx].strictly_dominates(lam),
                        "cellular expansion may only escape into more dominant shapes"
                    );
                }
            }
            rows.push(row);
        }
        mats.push(Matrix::from_rows(alg.field(), rows));
    }
    let g_action = mats.split_off(alg.n());
    let prefix = match flavor {
        Flavor::M => "S^",
        Flavor::N => "Sdual_",
    };
    let labels = tabs.iter().map(|t| format!("t={:?}", t.reading_word())).collect();
    RightModule::new(alg, format!("{}{}", prefix, lam), labels, mats, g_action)
}

pub fn specht(alg: &Algebra, lam: &MultiPartition) -> RightModule {
    cell_module(alg, lam, Flavor::M)
}

pub fn dual_specht(alg: &Algebra, lam: &MultiPartition) -> RightModule {
    cell_module(alg, lam, Flavor::N)
}

/// Gram matrix of the cell-module bilinear form over the generic ground
/// ring: entry (s,t) is the coefficient read off from the product of basis
/// cellular elements.
pub fn gram_generic(alg: &Algebra, lam: &MultiPartition, flavor: Flavor) -> Matrix {
    let data = alg.cell_data(flavor);
    let shape_idx = data
        .shapes
        .iter()
        .position(|s| s == lam)
        .expect("shape of the right size");
    let dim = data.std_tabs[shape_idx].len();
    let corner = data.position(shape_idx, 0, 0);
    Matrix::from_fn(alg.field(), dim, dim, |s, t| {
        let prod = data.elements[data.position(shape_idx, 0, s)]
            .mul(&data.elements[data.position(shape_idx, t, 0)]);
        alg.expand_cellular(&prod, flavor)
            .terms
            .into_iter()
            .find(|(i, _)| *i == corner)
            .map(|(_, c)| c)
            .unwrap_or_else(|| Scalar::zero(alg.field()))
    })
}

pub fn gram_at(
    alg: &Algebra,
    lam: &MultiPartition,
    flavor: Flavor,
    spec: Specialization,
) -> Result<Matrix, ExactError> {
    let g = gram_generic(alg, lam, flavor);
    let mut rows = Vec::with_capacity(g.rows());
    for i in 0..g.rows() {
        let mut row = Vec::with_capacity(g.cols());
        for j in 0..g.cols() {
            row.push(spec.apply(g.get(i, j))?);
        }
        rows.push(row);
    }
    Ok(Matrix::from_rows(alg.field(), rows))
}

pub fn radical_dim(
    alg: &Algebra,
    lam: &MultiPartition,
    spec: Specialization,
) -> Result<usize, ExactError> {
    let g = gram_at(alg, lam, Flavor::M, spec)?;
    Ok(g.rows() - g.rank())
}

/// dim D^lambda = rank of the specialized Gram matrix.
pub fn simple_dim(
    alg: &Algebra,
    lam: &MultiPartition,
    spec: Specialization,
) -> Result<usize, ExactError> {
    Ok(gram_at(alg, lam, Flavor::M, spec)?.rank())
}

/// The shapes whose simple quotient survives: every component e-restricted
/// for the quantum characteristic of the specialization.
pub fn k_set(alg: &Algebra, spec: Specialization) -> Result<Vec<MultiPartition>, ExactError> {
    let e = spec.quantum_e(alg.field())?;
    Ok(MultiPartition::enumerate(alg.r(), alg.n())
        .into_iter()
        .filter(|lam| lam.is_e_restricted(e))
        .collect())
}

/// A basis of the space of module homomorphisms A -> B, as matrices
/// applied on the right of row vectors.
pub fn hom_space(a: &RightModule, b: &RightModule) -> Vec<Matrix> {
    let field = a.algebra().field();
    let (da, db) = (a.dim(), b.dim());
    if da == 0 || db == 0 {
        return Vec::new();
    }
    let mut pairs: Vec<(&Matrix, &Matrix)> = Vec::new();
    for j in 1..=a.algebra().n() {
        pairs.push((a.act_t(j), b.act_t(j)));
    }
    for i in 1..a.algebra().n() {
        pairs.push((a.act_g(i), b.act_g(i)));
    }
    let unknowns = da * db;
    let mut rows = Vec::new();
    for (ma, mb) in pairs {
        for p in 0..da {
            for q in 0..db {
                let mut row = vec![Scalar::zero(field); unknowns];
                for i in 0..da {
                    row[i * db + q] = row[i * db + q].add(ma.get(p, i));
                }
                for j in 0..db {
                    row[p * db + j] = row[p * db + j].sub(mb.get(j, q));
                }
                rows.push(row);
            }
        }
    }
    let system = Matrix::from_rows(field, rows);
    let kernel = system.right_kernel();
    (0..kernel.cols())
        .map(|c| Matrix::from_fn(field, da, db, |i, j| kernel.get(i * db + j, c).clone()))
        .collect()
}

/// Searches the homomorphism space for an invertible element; `None` means
/// no isomorphism was found (and, when the hom space is empty or the
/// dimensions differ, that none exists).
pub fn find_isomorphism(a: &RightModule, b: &RightModule) -> Option<Matrix> {
    if a.dim() != b.dim() {
        return None;
    }
    if a.dim() == 0 {
        return Some(Matrix::zero(a.algebra().field(), 0, 0));
    }
    let homs = hom_space(a, b);
    if homs.is_empty() {
        return None;
    }
    for h in &homs {
        if h.rank() == a.dim() {
            return Some(h.clone());
        }
    }
    let field = a.algebra().field();
    for point in 2..(2 + homs.len() * a.dim() + 3) {
        let mut x = Matrix::zero(field, a.dim(), b.dim());
        let mut c = Scalar::one(field);
        let step = Scalar::from_int(field, point as i64);
        for h in &homs {
            x = x.add(&h.scale(&c));
            c = c.mul(&step);
        }
        if x.rank() == a.dim() {
            return Some(x);
        }
    }
    None
}

/// The submodule generated by the given row vectors: grows the span until
/// it is closed under the action, returning the module together with the
/// ambient-coordinate rows of its basis.
pub fn generated_submodule(
    m: &RightModule,
    seed_rows: &[Vec<Scalar>],
    name: String,
) -> (RightModule, Vec<Vec<Scalar>>) {
    let field = m.algebra().field();
    let mut ech = Echelon::new(field, m.dim());
    let mut basis: Vec<Vec<Scalar>> = Vec::new();
    for r in seed_rows {
        if ech.extend(r.clone()) {
            basis.push(r.clone());
        }
    }
    let gens: Vec<&Matrix> = (1..=m.algebra().n())
        .map(|j| m.act_t(j))
        .chain((1..m.algebra().n()).map(|i| m.act_g(i)))
        .collect();
    let mut frontier = 0;
    while frontier < basis.len() {
        let v = basis[frontier].clone();
        frontier += 1;
        for g in &gens {
            let img = g.apply_row(&v);
            if ech.extend(img.clone()) {
                basis.push(img);
            }
        }
    }
    let mats: Vec<Matrix> = gens
        .iter()
        .map(|g| {
            let rows: Vec<Vec<Scalar>> = basis
                .iter()
                .map(|v| {
                    ech.coords(g.apply_row(v))
                        .expect("closed by construction")
                })
                .collect();
            Matrix::from_rows(field, rows)
        })
        .collect();
    let mut mats = mats;
    let g_action = mats.split_off(m.algebra().n());
    let labels = (0..basis.len()).map(|i| format!("v{}", i)).collect();
    let mut module = RightModule::new(m.algebra(), name, labels, mats, g_action);
    module.over = m.over;
    (module, basis)
}

/// The quotient of a module by an invariant subspace spanned by the given
/// rows; panics if the subspace is not invariant.
pub fn quotient_module(m: &RightModule, sub_rows: &[Vec<Scalar>], name: String) -> RightModule {
    let field = m.algebra().field();
    let mut ech = Echelon::new(field, m.dim());
    let mut sub_basis: Vec<Vec<Scalar>> = Vec::new();
    for r in sub_rows {
        if ech.extend(r.clone()) {
            sub_basis.push(r.clone());
        }
    }
    let s = sub_basis.len();
    let gens: Vec<&Matrix> = (1..=m.algebra().n())
        .map(|j| m.act_t(j))
        .chain((1..m.algebra().n()).map(|i| m.act_g(i)))
        .collect();
    for v in &sub_basis {
        for g in &gens {
            assert!(
                ech.contains(g.apply_row(v)),
                "subspace must be invariant under the action"
            );
        }
    }
    let mut kept = Vec::new();
    for i in 0..m.dim() {
        let mut unit = vec![Scalar::zero(field); m.dim()];
        unit[i] = Scalar::one(field);
        if ech.extend(unit) {
            kept.push(i);
        }
    }
    assert_eq!(s + kept.len(), m.dim());
    let mats: Vec<Matrix> = gens
        .iter()
        .map(|g| {
            let rows: Vec<Vec<Scalar>> = kept
                .iter()
                .map(|&i| {
                    let coords = ech
                        .coords(g.row_vec(i))
                        .expect("echelon spans the whole space");
                    coords[s..].to_vec()
                })
                .collect();
            Matrix::from_rows(field, rows)
        })
        .collect();
    let mut mats = mats;
    let g_action = mats.split_off(m.algebra().n());
    let labels = kept.iter().map(|&i| m.labels()[i].clone()).collect();
    let mut module = RightModule::new(m.algebra(), name, labels, mats, g_action);
    module.over = m.over;
    module
}



/// Basis of the Jacobson radical of the specialized algebra, computed as
/// the radical of the trace form of the regular representation (valid in
/// characteristic zero).
pub fn jacobson_radical(
    alg: &Algebra,
    spec: Specialization,
) -> Result<Vec<Element>, ExactError> {
    let reg = regular_module(alg).module.specialize(spec)?;
    let monos = alg.monomials();
    let mats: Vec<Matrix> = monos.iter().map(|m| reg.act_monomial(m)).collect();
    let d = alg.dim();
    let field = alg.field();
    let gram = Matrix::from_fn(field, d, d, |a, b| {
        let prod = mats[a].mul(&mats[b]);
        let mut tr = Scalar::zero(field);
        for i in 0..d {
            tr = tr.add(prod.get(i, i));
        }
        tr
    });
    let kernel = gram.left_kernel();
    Ok((0..kernel.rows())
        .map(|i| alg.element_from_vec(&kernel.row_vec(i)))
        .collect())
}

/// The simple head D^mu of the specialized Specht module, as an explicit
/// quotient by the radical of the Gram form.
pub fn simple_module(
    alg: &Algebra,
    mu: &MultiPartition,
    spec: Specialization,
) -> Result<RightModule, ExactError> {
    let s = specht(alg, mu).specialize(spec)?;
    let g = gram_at(alg, mu, Flavor::M, spec)?;
    let rad = g.left_kernel();
    let rows: Vec<Vec<Scalar>> = (0..rad.rows()).map(|i| rad.row_vec(i)).collect();
    Ok(quotient_module(&s, &rows, format!("D^{}", mu)))
}

/// Decomposition numbers of the specialized Yokonuma-Hecke algebra: rows
/// over all shapes, columns over the shapes with nonzero simple quotient,
/// entry = composition multiplicity of D^mu in S^lambda, computed through
/// the radical series of each Specht module.
pub struct DecompositionTable {
    pub row_shapes: Vec<MultiPartition>,
    pub col_shapes: Vec<MultiPartition>,
    pub entries: Vec<Vec<usize>>,
}

impl DecompositionTable {
    pub fn entry(&self, lam: &MultiPartition, mu: &MultiPartition) -> usize {
        let i = self.row_shapes.iter().position(|s| s == lam).unwrap();
        let j = self.col_shapes.iter().position(|s| s == mu).unwrap();
        self.entries[i][j]
    }

    pub fn is_identity(&self) -> bool {
        self.row_shapes == self.col_shapes
            && self
                .entries
                .iter()
                .enumerate()
                .all(|(i, row)| row.iter().enumerate().all(|(j, &e)| e == usize::from(i == j)))
    }
}

pub fn hecke_decomposition_matrix(
    alg: &Algebra,
    spec: Specialization,
) -> Result<DecompositionTable, ExactError> {
    let row_shapes = MultiPartition::enumerate(alg.r(), alg.n());
    let col_shapes = k_set(alg, spec)?;
    let simples: Vec<RightModule> = col_shapes
        .iter()
        .map(|mu| simple_module(alg, mu, spec))
        .collect::<Result<_, _>>()?;
    for d in &simples {
        assert!(d.dim() > 0, "restricted shapes have nonzero simple quotient");
    }
    let end_dims: Vec<usize> = simples.iter().map(|d| hom_space(d, d).len()).collect();
    let radical = jacobson_radical(alg, spec)?;
    let mut entries = Vec::with_capacity(row_shapes.len());
    for lam in &row_shapes {
        let s = specht(alg, lam).specialize(spec)?;
        entries.push(composition_multiplicities(&s, &radical, &simples, &end_dims));
    }
    Ok(DecompositionTable {
        row_shapes,
        col_shapes,
        entries,
    })
}

/// Multiplicity of each simple in a specialized module, via its radical
/// series: each layer is semisimple, so counting homomorphisms into the
/// simples (divided by their endomorphism dimensions) is exact.
pub fn composition_multiplicities(
    m: &RightModule,
    radical: &[Element],
    simples: &[RightModule],
    end_dims: &[usize],
) -> Vec<usize> {
    let field = m.algebra().field();
    let mut counts = vec![0usize; simples.len()];
    let mut current: Vec<Vec<Scalar>> = (0..m.dim())
        .map(|i| {
            let mut v = vec![Scalar::zero(field); m.dim()];
            v[i] = Scalar::one(field);
            v
        })
        .collect();
    let rad_mats: Vec<Matrix> = radical.iter().map(|j| m.act_element(j)).collect();
    loop {
        let (layer_mod, layer_basis) = generated_submodule(m, &current, "layer".to_string());
        assert_eq!(
            layer_basis.len(),
            current.len(),
            "radical powers are submodules"
        );
        if layer_mod.dim() == 0 {
            break;
        }
        let mut next: Vec<Vec<Scalar>> = Vec::new();
        for v in &layer_basis {
            for rm in &rad_mats {
                next.push(rm.apply_row(v));
            }
        }
        let mut sub_ech = Echelon::new(field, m.dim());
        let mut next_basis: Vec<Vec<Scalar>> = Vec::new();
        for v in &next {
            if sub_ech.insert(v.clone()) {
                next_basis.push(v.clone());
            }
        }
        // Express the next step inside the current layer's coordinates.
        let mut layer_ech = Echelon::new(field, m.dim());
        for v in &layer_basis {
            layer_ech.insert(v.clone());
        }
        let sub_in_layer: Vec<Vec<Scalar>> = next_basis
            .iter()
            .map(|v| layer_ech.coords(v.clone()).expect("contained in the layer"))
            .collect();
        let quotient = quotient_module(&layer_mod, &sub_in_layer, "layer quotient".to_string());
        let mut layer_total = 0usize;
        for (k, d) in simples.iter().enumerate() {
            let h = hom_space(&quotient, d).len();
            assert_eq!(h % end_dims[k], 0, "hom count divisible by End dimension");
            counts[k] += h / end_dims[k];
            layer_total += (h / end_dims[k]) * d.dim();
        }
        assert_eq!(
            layer_total,
            quotient.dim(),
            "semisimple layer fully accounted for by the simples"
        );
        current = next_basis;
    }
    counts
}

/// One layer of a filtration: a shape and how many copies of its cell
/// module occur.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltLayer {
    pub shape: MultiPartition,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    pub layers: Vec<FiltLayer>,
}

impl Filtration {
    pub fn total_steps(&self) -> usize {
        self.layers.iter().map(|l| l.multiplicity).sum()
    }

    pub fn multiplicity_of(&self, lam: &MultiPartition) -> usize {
        self.layers
            .iter()
            .find(|l| &l.shape == lam)
            .map(|l| l.multiplicity)
            .unwrap_or(0)
    }
}

/// Verifies a layered basis of a module: the cumulative spans (most
/// dominant shape first) form a chain of submodules whose successive
/// quotients act exactly like the expected cell modules, one copy per
/// sub-block.  Panics if any of that fails; returns the layer summary.
fn verify_layered_filtration(
    alg: &Algebra,
    groups: &[(MultiPartition, Vec<Vec<Element>>)],
    layer_module: impl Fn(&MultiPartition) -> RightModule,
) -> Filtration {
    let field = alg.field();
    let mut ech = Echelon::new(field, alg.dim());
    let mut pos: Vec<(usize, usize, usize)> = Vec::new();
    let mut flat: Vec<&Element> = Vec::new();
    for (g, (_, copies)) in groups.iter().enumerate() {
        for (c, copy) in copies.iter().enumerate() {
            for (p, e) in copy.iter().enumerate() {
                let fresh = ech.insert(e.to_vec());
                assert!(fresh, "filtration basis must be linearly independent");
                pos.push((g, c, p));
                flat.push(e);
            }
        }
    }
    let gens = generator_elements(alg);
    for (g, (shape, copies)) in groups.iter().enumerate() {
        let layer = layer_module(shape);
        assert_eq!(copies.iter().map(Vec::len).max().unwrap_or(0), layer.dim());
        for (c, copy) in copies.iter().enumerate() {
            assert_eq!(copy.len(), layer.dim());
            for (gen_idx, gen) in gens.iter().enumerate() {
                let expected = if gen_idx < alg.n() {
                    layer.act_t(gen_idx + 1)
                } else {
                    layer.act_g(gen_idx - alg.n() + 1)
                };
                for (p, e) in copy.iter().enumerate() {
                    let coords = ech
                        .coords(e.mul(gen).to_vec())
                        .expect("module closed under the action");
                    let mut row = vec![Scalar::zero(field); layer.dim()];
                    for (k, coef) in coords.into_iter().enumerate() {
                        if coef.is_zero() {
                            continue;
                        }
                        let (g2, c2, p2) = pos[k];
                        if g2 == g {
                            assert_eq!(c2, c, "no mixing between copies of a layer");
                            row[p2] = coef;
                        } else {
                            assert!(
                                groups[g2].0.strictly_dominates(shape),
                                "leakage only into more dominant shapes"
                            );
                        }
                    }
                    for (t_idx, coef) in row.iter().enumerate() {
                        assert_eq!(
                            coef,
                            expected.get(p, t_idx),
                            "quotient action matches the cell module"
                        );
                    }
                }
            }
        }
    }
    Filtration {
        layers: groups
            .iter()
            .map(|(shape, copies)| FiltLayer {
                shape: shape.clone(),
                multiplicity: copies.len(),
            })
            .collect(),
    }
}

/// The semistandard basis element m_St for a semistandard tableau S and a
/// standard tableau t of the same shape.
pub fn semistandard_element(alg: &Algebra, s: &TypedTableau, t: &MultiTableau) -> Element {
    let mut out = alg.zero();
    for pre in s.standard_preimages() {
        let q_pow = Scalar::q_pow(alg.field(), pre.d_perm().length() as i64);
        out = out.add(&alg.cellular_m(&pre, t).scale(&q_pow));
    }
    out
}

/// The Specht filtration of M^mu carried by the semistandard basis
/// {m_St}; verified layer by layer.  The number of copies of S^lambda is
/// the number of semistandard lambda-tableaux of type mu with entries in
/// their own components.
pub fn specht_filtration(alg: &Algebra, mu: &MultiComposition) -> Filtration {
    let mut groups = Vec::new();
    for lam in MultiPartition::enumerate(alg.r(), alg.n()) {
        let semis = TypedTableau::t0_plus(&lam, mu);
        if semis.is_empty() {
            continue;
        }
        let std_tabs = MultiTableau::standard(&lam);
        let copies: Vec<Vec<Element>> = semis
            .iter()
            .map(|s| {
                std_tabs
                    .iter()
                    .map(|t| semistandard_element(alg, s, t))
                    .collect()
            })
            .collect();
        groups.push((lam, copies));
    }
    let total: usize = groups
        .iter()
        .map(|(_, c)| c.iter().map(Vec::len).sum::<usize>())
        .sum();
    assert_eq!(
        total,
        YoungSubgroup::from_parts(alg.n(), &mu.flat_parts())
            .coset_reps()
            .len(),
        "semistandard basis has the size of the permutation module"
    );
    verify_layered_filtration(alg, &groups, |lam| specht(alg, lam))
}

/// The partition obtained by sorting each component of a composition.
fn sorted_partition(mu: &MultiComposition) -> MultiPartition {
    let comps: Vec<Vec<usize>> = mu
        .comps()
        .iter()
        .map(|c| {
            let mut v = c.clone();
            v.sort_unstable_by(|a, b| b.cmp(a));
            v
        })
        .collect();
    MultiPartition::new(comps)
}

/// The dual-Specht filtration of M^mu carried by the basis
/// {m_mu n_{St'}}, with one copy of the n-flavor cell module of lambda per
/// column-semistandard lambda-tableau of type mu (m-flavor input), or the
/// Specht filtration of N^mu from {n_mu m_{St'}} (n-flavor input).
pub fn alt_filtration(alg: &Algebra, mu: &MultiComposition, flavor: Flavor) -> Filtration {
    let front = match flavor {
        Flavor::M => alg.m_elem(mu),
        Flavor::N => alg.n_elem(mu),
    };
    let mu_plus = sorted_partition(mu);
    let mut groups = Vec::new();
    for lam in MultiPartition::enumerate(alg.r(), alg.n()) {
        let cols = TypedTableau::column_semistandard(&lam, mu);
        if cols.is_empty() {
            continue;
        }
        assert!(
            lam.transpose().dominates(&mu_plus),
            "transposed layer shapes dominate the sorted shape"
        );
        let std_tabs = MultiTableau::standard(&lam);
        let copies: Vec<Vec<Element>> = cols
            .iter()
            .map(|s| {
                let dotted = s.dotted_standard();
                std_tabs
                    .iter()
                    .map(|t| match flavor {
                        Flavor::M => front.mul(&alg.cellular_n(&dotted, t)),
                        Flavor::N => front.mul(&alg.cellular_m(&dotted, t)),
                    })
                    .collect()
            })
            .collect();
        groups.push((lam, copies));
    }
    let layer_flavor = match flavor {
        Flavor::M => Flavor::N,
        Flavor::N => Flavor::M,
    };
    verify_layered_filtration(alg, &groups, |lam| cell_module(alg, lam, layer_flavor))
}

/// A basis of Hom(M^nu, M^mu): one matrix per distinguished double-coset
/// representative lying in the common symmetric subgroup of the component
/// sizes; empty when the component sizes differ.
pub fn perm_hom_basis(alg: &Algebra, nu: &MultiComposition, mu: &MultiComposition) -> Vec<Matrix> {
    if mu.alpha() != nu.alpha() {
        return Vec::new();
    }
    let field = alg.field();
    let s_alpha = YoungSubgroup::from_parts(alg.n(), &mu.alpha());
    let s_mu = YoungSubgroup::from_parts(alg.n(), &mu.flat_parts());
    let s_nu = YoungSubgroup::from_parts(alg.n(), &nu.flat_parts());
    let m_nu = perm_module(alg, nu);
    let m_mu = perm_module(alg, mu);
    let reps_nu = YoungSubgroup::from_parts(alg.n(), &nu.flat_parts()).coset_reps();
    let u_mu = alg.u_cap(mu);
    let mut out = Vec::new();
    let mut indep = Echelon::new(field, m_nu.module.dim() * m_mu.module.dim());
    for d in double_coset_reps(&s_mu, &s_nu) {
        if !s_alpha.contains(&d) {
            continue;
        }
        // The image of m_nu: the double-coset sum Sum q^{l(w)} U_mu g_w.
        let mut seen = BTreeSet::new();
        let mut coset_sum = alg.zero();
        for u in s_mu.elements() {
            for v in s_nu.elements() {
                let w = u.compose(&d).compose(&v);
                if seen.insert(w.one_line()) {
                    let c = Scalar::q_pow(field, w.length() as i64);
                    coset_sum = coset_sum.add(&alg.g_of(&w).scale(&c));
                }
            }
        }
        let image = u_mu.mul(&coset_sum);
        let rows: Vec<Vec<Scalar>> = reps_nu
            .iter()
            .map(|rep| {
                m_mu.coords(&image.mul(&alg.g_of(rep)))
                    .expect("homomorphism image lies in the target module")
            })
            .collect();
        let x = Matrix::from_rows(field, rows);
        for j in 1..=alg.n() {
            assert_eq!(
                m_nu.module.act_t(j).mul(&x),
                x.mul(m_mu.module.act_t(j)),
                "map intertwines t_{}",
                j
            );
        }
        for i in 1..alg.n() {
            assert_eq!(
                m_nu.module.act_g(i).mul(&x),
                x.mul(m_mu.module.act_g(i)),
                "map intertwines g_{}",
                i
            );
        }
        let mut flatv = Vec::with_capacity(x.rows() * x.cols());
        for i in 0..x.rows() {
            flatv.extend(x.row_vec(i));
        }
        assert!(indep.insert(flatv), "double-coset maps are independent");
        out.push(x);
    }
    out
}
