//! Finite-dimensional modules over a [`BasicAlgebra`]: action matrices,
//! hom spaces, Loewy structure (radical, socle, top), projective covers
//! and injective envelopes.
//!
//! A left module stores one matrix per algebra basis element with
//! `action(a·b) = action(a)·action(b)`; a right module stores the
//! anti-representation `action(a·b) = action(b)·action(a)`. Right modules
//! are the same thing as left modules over the opposite algebra with the
//! identical matrices, which is how the injective-side constructions are
//! implemented.

use crate::algebra::{AlgebraRef, BasicAlgebra};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::{Matrix, Subspace};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

#[derive(Clone)]
pub struct Module {
    pub algebra: AlgebraRef,
    pub side: Side,
    pub dim: usize,
    /// action[k] = matrix of basis element k on column vectors.
    pub action: Vec<Matrix>,
}

impl std::fmt::Debug for Module {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Module(dim {}, {:?}, over {:?})", self.dim, self.side, self.algebra)
    }
}

/// A homomorphism of modules, stored as the matrix acting on column
/// vectors: `v ↦ matrix · v` maps source to target. Composition of
/// `f: X → Y` and `g: Y → Z` is the matrix product `g.matrix · f.matrix`.
#[derive(Clone)]
pub struct ModuleMap {
    pub source: Module,
    pub target: Module,
    pub matrix: Matrix,
}

impl ModuleMap {
    pub fn then(&self, next: &ModuleMap) -> ModuleMap {
        ModuleMap {
            source: self.source.clone(),
            target: next.target.clone(),
            matrix: next.matrix.mul(&self.matrix),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Checks the intertwining property against every generator.
    pub fn validate(&self) -> Result<()> {
        if !self.source.same_algebra(&self.target) || self.source.side != self.target.side {
            return Err(Error::AlgebraMismatch);
        }
        for &g in &self.source.algebra.generators {
            let lhs = self.matrix.mul(&self.source.action[g]);
            let rhs = self.target.action[g].mul(&self.matrix);
            if lhs != rhs {
                return Err(Error::Invalid(format!(
                    "map does not intertwine generator {g}"
                )));
            }
        }
        Ok(())
    }
}

/// A module built as an explicit direct sum of standard projectives
/// `A·e_v` (or standard injectives `D(e_v·A)`): the summand vertex list,
/// the assembled module, and per-coordinate provenance.
#[derive(Clone)]
pub struct StandardTerm {
    pub summands: Vec<usize>,
    pub module: Module,
    /// For each coordinate of the module: (summand position, algebra basis
    /// index realised at that coordinate).
    pub coords: Vec<(usize, usize)>,
    /// Coordinate of each summand's generator (the idempotent slot).
    pub generator_coords: Vec<usize>,
}

impl Module {
    pub fn new(algebra: AlgebraRef, side: Side, action: Vec<Matrix>) -> Module {
        assert_eq!(action.len(), algebra.dim);
        let dim = action.first().map_or(0, |m| m.rows);
        let m = Module {
            algebra,
            side,
            dim,
            action,
        };
        debug_assert!(m.validate().is_ok(), "module action is inconsistent");
        m
    }

    pub fn zero(algebra: AlgebraRef, side: Side) -> Module {
        let action = (0..algebra.dim)
            .map(|_| Matrix::zero(algebra.field, 0, 0))
            .collect();
        Module {
            algebra,
            side,
            dim: 0,
            action,
        }
    }

    pub fn is_zero_module(&self) -> bool {
        self.dim == 0
    }

    pub fn same_algebra(&self, other: &Module) -> bool {
        std::sync::Arc::ptr_eq(&self.algebra, &other.algebra)
            || self.algebra.structurally_eq(&other.algebra)
    }

    /// Full consistency check of the action: idempotents are commuting
    /// projectors summing to the identity, and the action respects every
    /// structure constant on generator pairs (all pairs when small).
    pub fn validate(&self) -> Result<()> {
        let a = &self.algebra;
        let f = a.field;
        let mut sum = Matrix::zero(f, self.dim, self.dim);
        for &e in &a.idempotents {
            let m = &self.action[e];
            if m.mul(m) != *m {
                return Err(Error::Invalid("idempotent does not act as a projector".into()));
            }
            sum = sum.add(m);
        }
        if !sum.is_identity() {
            return Err(Error::Invalid("idempotent actions do not sum to identity".into()));
        }
        let pairs: Vec<(usize, usize)> = if a.dim <= 24 {
            (0..a.dim)
                .flat_map(|i| (0..a.dim).map(move |j| (i, j)))
                .collect()
        } else {
            a.generators
                .iter()
                .flat_map(|&i| a.generators.iter().map(move |&j| (i, j)))
                .collect()
        };
        for (i, j) in pairs {
            let composite = match self.side {
                Side::Left => self.action[i].mul(&self.action[j]),
                Side::Right => self.action[j].mul(&self.action[i]),
            };
            let mut expected = Matrix::zero(f, self.dim, self.dim);
            for (k, c) in a.mul_basis(i, j) {
                expected = expected.add(&self.action[*k].scale(c));
            }
            if composite != expected {
                return Err(Error::Invalid(format!(
                    "action violates the structure constant at ({i},{j})"
                )));
            }
        }
        Ok(())
    }

    /// The simple module at a vertex: one-dimensional, e_v acts as 1.
    pub fn simple(algebra: &AlgebraRef, v: usize) -> Result<Module> {
        if v >= algebra.num_vertices() {
            return Err(Error::UnknownVertex(format!("#{v}")));
        }
        let f = algebra.field;
        let ev = algebra.idempotents[v];
        let action = (0..algebra.dim)
            .map(|k| {
                if k == ev {
                    Matrix::identity(f, 1)
                } else {
                    Matrix::zero(f, 1, 1)
                }
            })
            .collect();
        Ok(Module {
            algebra: algebra.clone(),
            side: Side::Left,
            dim: 1,
            action,
        })
    }

    /// The indecomposable projective left module A·e_v, realised on the
    /// basis elements with source anchor v.
    pub fn projective(algebra: &AlgebraRef, v: usize) -> Result<Module> {
        if v >= algebra.num_vertices() {
            return Err(Error::UnknownVertex(format!("#{v}")));
        }
        Ok(standard_projective(algebra, &[v]).module)
    }

    /// The indecomposable injective left module D(e_v·A); its socle is the
    /// simple at v.
    pub fn injective(algebra: &AlgebraRef, v: usize) -> Result<Module> {
        if v >= algebra.num_vertices() {
            return Err(Error::UnknownVertex(format!("#{v}")));
        }
        Ok(standard_injective(algebra, &[v]).module)
    }

    /// The left regular module.
    pub fn regular(algebra: &AlgebraRef) -> Module {
        let action = (0..algebra.dim)
            .map(|k| algebra.left_mult_matrix(k))
            .collect();
        Module {
            algebra: algebra.clone(),
            side: Side::Left,
            dim: algebra.dim,
            action,
        }
    }

    /// The right regular module (as an anti-representation).
    pub fn regular_right(algebra: &AlgebraRef) -> Module {
        let action = (0..algebra.dim)
            .map(|k| algebra.right_mult_matrix(k))
            .collect();
        Module {
            algebra: algebra.clone(),
            side: Side::Right,
            dim: algebra.dim,
            action,
        }
    }

    /// k-dual: transposed actions on the opposite side, same algebra.
    /// Applying it twice returns the original matrices.
    pub fn dual(&self) -> Module {
        Module {
            algebra: self.algebra.clone(),
            side: self.side.flip(),
            dim: self.dim,
            action: self.action.iter().map(|m| m.transpose()).collect(),
        }
    }

    /// Reinterprets this module over a structurally-equal algebra handle
    /// (typically an opposite built elsewhere), flipping the side: a right
    /// A-module is exactly a left module over A^op with the same matrices.
    pub fn reinterpret_over(&self, algebra: AlgebraRef, side: Side) -> Module {
        debug_assert_eq!(algebra.dim, self.algebra.dim);
        Module {
            algebra,
            side,
            dim: self.dim,
            action: self.action.clone(),
        }
    }

    pub fn direct_sum(algebra: &AlgebraRef, parts: &[&Module]) -> Module {
        let side = parts.first().map_or(Side::Left, |m| m.side);
        let f = algebra.field;
        let dim: usize = parts.iter().map(|m| m.dim).sum();
        let action = (0..algebra.dim)
            .map(|k| {
                let mut m = Matrix::zero(f, dim, dim);
                let mut off = 0usize;
                for p in parts {
                    for i in 0..p.dim {
                        for j in 0..p.dim {
                            let v = p.action[k].get(i, j);
                            if !f.is_zero(v) {
                                m.set(off + i, off + j, v.clone());
                            }
                        }
                    }
                    off += p.dim;
                }
                m
            })
            .collect();
        Module {
            algebra: algebra.clone(),
            side,
            dim,
            action,
        }
    }

    /// dim e_v·M for every vertex (rank of the idempotent projector).
    pub fn vertex_dims(&self) -> Vec<usize> {
        self.algebra
            .idempotents
            .iter()
            .map(|&e| self.action[e].rank())
            .collect()
    }

    /// Basis of e_v·M as a subspace of the module.
    pub fn vertex_subspace(&self, v: usize) -> Subspace {
        let e = self.algebra.idempotents[v];
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.action[e].column(j)).collect();
        Subspace::from_spanning(self.algebra.field, self.dim, &cols)
    }

    /// The submodule spanned by the given vectors (closure is the caller's
    /// responsibility; checked in debug builds), returned with its
    /// embedding.
    pub fn submodule(&self, span: &[Vec<Scalar>]) -> (Module, ModuleMap) {
        let f = self.algebra.field;
        let sub = Subspace::from_spanning(f, self.dim, span);
        let b = &sub.basis;
        let action: Vec<Matrix> = (0..self.algebra.dim)
            .map(|k| {
                let image = self.action[k].mul(b);
                b.solve_matrix(&image)
                    .expect("span is not invariant under the algebra action")
            })
            .collect();
        let module = Module {
            algebra: self.algebra.clone(),
            side: self.side,
            dim: sub.dim(),
            action,
        };
        let map = ModuleMap {
            source: module.clone(),
            target: self.clone(),
            matrix: b.clone(),
        };
        (module, map)
    }

    /// The quotient by an invariant subspace, returned with its projection.
    pub fn quotient(&self, span: &[Vec<Scalar>]) -> (Module, ModuleMap) {
        let f = self.algebra.field;
        let sub = Subspace::from_spanning(f, self.dim, span);
        let s = sub.dim();
        let q = self.dim - s;
        // Complement positions: coordinates that are not pivotal in the
        // echelon basis of the subspace.
        let mut pivot = vec![false; self.dim];
        for j in 0..s {
            let col = sub.basis.column(j);
            let lead = col.iter().position(|c| !f.is_zero(c)).expect("zero basis vector");
            pivot[lead] = true;
        }
        let complement: Vec<usize> = (0..self.dim).filter(|&i| !pivot[i]).collect();
        let mut t = Matrix::zero(f, self.dim, self.dim);
        for j in 0..s {
            for i in 0..self.dim {
                t.set(i, j, sub.basis.get(i, j).clone());
            }
        }
        for (j, &pos) in complement.iter().enumerate() {
            t.set(pos, s + j, f.one());
        }
        let t_inv = t.inverse().expect("subspace basis plus complement is a basis");
        let proj = Matrix::from_fn(f, q, self.dim, |i, j| t_inv.get(s + i, j).clone());
        let mut section = Matrix::zero(f, self.dim, q);
        for (j, &pos) in complement.iter().enumerate() {
            section.set(pos, j, f.one());
        }
        let action: Vec<Matrix> = (0..self.algebra.dim)
            .map(|k| proj.mul(&self.action[k]).mul(&section))
            .collect();
        let module = Module {
            algebra: self.algebra.clone(),
            side: self.side,
            dim: q,
            action,
        };
        let map = ModuleMap {
            source: self.clone(),
            target: module.clone(),
            matrix: proj,
        };
        (module, map)
    }

    /// Radical generators of the algebra: the generating set minus the
    /// idempotents.
    fn radical_generators(&self) -> Vec<usize> {
        self.algebra
            .generators
            .iter()
            .copied()
            .filter(|g| !self.algebra.idempotents.contains(g))
            .collect()
    }

    /// rad(A)·M (resp. M·rad(A)) with its embedding: the closure of the
    /// images of the radical generators.
    pub fn radical_submodule(&self) -> (Module, ModuleMap) {
        let f = self.algebra.field;
        let gens = self.radical_generators();
        let mut vectors: Vec<Vec<Scalar>> = Vec::new();
        for &g in &gens {
            for j in 0..self.dim {
                vectors.push(self.action[g].column(j));
            }
        }
        let mut span = Subspace::from_spanning(f, self.dim, &vectors);
        loop {
            let mut grown = span.basis_vectors();
            let before = span.dim();
            for &g in &gens {
                for v in span.basis_vectors() {
                    grown.push(self.action[g].apply(&v));
                }
            }
            let bigger = Subspace::from_spanning(f, self.dim, &grown);
            if bigger.dim() == before {
                break;
            }
            span = bigger;
        }
        self.submodule(&span.basis_vectors())
    }

    /// The socle (joint kernel of the radical generators) with embedding.
    pub fn socle_submodule(&self) -> (Module, ModuleMap) {
        let f = self.algebra.field;
        let gens = self.radical_generators();
        if gens.is_empty() {
            // Semisimple algebra: the socle is everything.
            return self.submodule(
                &(0..self.dim)
                    .map(|i| {
                        let mut v = vec![f.zero(); self.dim];
                        v[i] = f.one();
                        v
                    })
                    .collect::<Vec<_>>(),
            );
        }
        let mut stacked = self.action[gens[0]].clone();
        for &g in &gens[1..] {
            stacked = stacked.vstack(&self.action[g]);
        }
        let kernel = stacked.kernel_basis();
        self.submodule(&kernel)
    }

    /// M / rad·M with the quotient map.
    pub fn top_quotient(&self) -> (Module, ModuleMap) {
        let (rad, _) = self.radical_submodule();
        let span: Vec<Vec<Scalar>> = {
            let (_, emb) = self.radical_submodule();
            (0..rad.dim).map(|j| emb.matrix.column(j)).collect()
        };
        self.quotient(&span)
    }

    /// Multiplicity vector of the simples in the top (resp. socle).
    pub fn top_multiplicities(&self) -> Vec<usize> {
        let (top, _) = self.top_quotient();
        top.vertex_dims()
    }

    pub fn socle_multiplicities(&self) -> Vec<usize> {
        let (soc, _) = self.socle_submodule();
        soc.vertex_dims()
    }
}

/// Basis of Hom(M, N): all matrices intertwining the generator actions,
/// in the deterministic kernel order of the stacked constraint system.
pub fn hom_basis(m: &Module, n: &Module) -> Result<Vec<ModuleMap>> {
    if !m.same_algebra(n) || m.side != n.side {
        return Err(Error::AlgebraMismatch);
    }
    let f = m.algebra.field;
    let (dm, dn) = (m.dim, n.dim);
    if dm == 0 || dn == 0 {
        return Ok(vec![]);
    }
    let unknowns = dm * dn;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for &g in &m.algebra.generators {
        let a = &m.action[g];
        let b = &n.action[g];
        // (F·a − b·F)_{ij} = Σ_k F_{ik} a_{kj} − Σ_k b_{ik} F_{kj} = 0.
        for i in 0..dn {
            for j in 0..dm {
                let mut row = vec![f.zero(); unknowns];
                for k in 0..dm {
                    let c = a.get(k, j);
                    if !f.is_zero(c) {
                        let idx = i * dm + k;
                        row[idx] = f.add(&row[idx], c);
                    }
                }
                for k in 0..dn {
                    let c = b.get(i, k);
                    if !f.is_zero(c) {
                        let idx = k * dm + j;
                        row[idx] = f.sub(&row[idx], c);
                    }
                }
                if row.iter().any(|c| !f.is_zero(c)) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        rows.push(vec![f.zero(); unknowns]);
    }
    let constraints = Matrix::from_rows(f, rows);
    let kernel = constraints.kernel_basis();
    Ok(kernel
        .into_iter()
        .map(|v| {
            let matrix = Matrix::from_fn(f, dn, dm, |i, j| v[i * dm + j].clone());
            ModuleMap {
                source: m.clone(),
                target: n.clone(),
                matrix,
            }
        })
        .collect())
}

/// Builds ⊕_t A·e_{v_t} with coordinate provenance.
pub fn standard_projective(algebra: &AlgebraRef, summands: &[usize]) -> StandardTerm {
    let f = algebra.field;
    let mut coords: Vec<(usize, usize)> = Vec::new();
    let mut generator_coords: Vec<usize> = Vec::new();
    for (pos, &v) in summands.iter().enumerate() {
        let gen_basis = algebra.idempotents[v];
        for k in 0..algebra.dim {
            if algebra.support[k].1 == v {
                if k == gen_basis {
                    generator_coords.push(coords.len());
                }
                coords.push((pos, k));
            }
        }
    }
    let dim = coords.len();
    let action: Vec<Matrix> = (0..algebra.dim)
        .map(|g| {
            let mut m = Matrix::zero(f, dim, dim);
            for (col, &(pos, k)) in coords.iter().enumerate() {
                for (t, c) in algebra.mul_basis(g, k) {
                    let row = coords
                        .iter()
                        .position(|&(p2, k2)| p2 == pos && k2 == *t)
                        .expect("product stays in the summand block");
                    m.set(row, col, c.clone());
                }
            }
            m
        })
        .collect();
    StandardTerm {
        summands: summands.to_vec(),
        module: Module {
            algebra: algebra.clone(),
            side: Side::Left,
            dim,
            action,
        },
        coords,
        generator_coords,
    }
}

/// Builds ⊕_t D(e_{v_t}·A) with coordinate provenance: the dual basis of
/// the e_v-anchored right structure, transposed right multiplication.
pub fn standard_injective(algebra: &AlgebraRef, summands: &[usize]) -> StandardTerm {
    let f = algebra.field;
    let mut coords: Vec<(usize, usize)> = Vec::new();
    let mut generator_coords: Vec<usize> = Vec::new();
    for (pos, &v) in summands.iter().enumerate() {
        let gen_basis = algebra.idempotents[v];
        for k in 0..algebra.dim {
            if algebra.support[k].0 == v {
                if k == gen_basis {
                    generator_coords.push(coords.len());
                }
                coords.push((pos, k));
            }
        }
    }
    let dim = coords.len();
    let action: Vec<Matrix> = (0..algebra.dim)
        .map(|g| {
            // Transposed right multiplication by g on e_v·A: the right
            // action sends coordinate k to Σ c·t, so the dual action has
            // entry (k, t) = c.
            let mut m = Matrix::zero(f, dim, dim);
            for (col, &(pos, k)) in coords.iter().enumerate() {
                for (t, c) in algebra.mul_basis(k, g) {
                    let row = coords
                        .iter()
                        .position(|&(p2, k2)| p2 == pos && k2 == *t)
                        .expect("product stays in the summand block");
                    m.set(col, row, c.clone());
                }
            }
            m
        })
        .collect();
    StandardTerm {
        summands: summands.to_vec(),
        module: Module {
            algebra: algebra.clone(),
            side: Side::Left,
            dim,
            action,
        },
        coords,
        generator_coords,
    }
}

/// A projective cover P(M) ↠ M: the standard term and the covering map.
pub struct Cover {
    pub term: StandardTerm,
    pub map: ModuleMap,
}

/// Projective cover: one summand A·e_v per simple factor of the top, with
/// the map sending each generator to a lifted top basis vector.
pub fn projective_cover(m: &Module) -> Cover {
    let f = m.algebra.field;
    let (_, proj) = {
        let (rad_module, rad_emb) = m.radical_submodule();
        let span: Vec<Vec<Scalar>> = (0..rad_module.dim).map(|j| rad_emb.matrix.column(j)).collect();
        m.quotient(&span)
    };
    // For each vertex, a basis of e_v·top lifted into e_v·M.
    let mut summands: Vec<usize> = Vec::new();
    let mut lifts: Vec<Vec<Scalar>> = Vec::new();
    let top_dim = proj.matrix.rows;
    for v in 0..m.algebra.num_vertices() {
        let e = m.algebra.idempotents[v];
        // e_v acting on the quotient.
        let top_e = {
            let section = section_of(&proj.matrix, f);
            proj.matrix.mul(&m.action[e]).mul(&section)
        };
        let cols: Vec<Vec<Scalar>> = (0..top_dim).map(|j| top_e.column(j)).collect();
        let sub = Subspace::from_spanning(f, top_dim, &cols);
        for w in sub.basis_vectors() {
            // Preimage of w under the projection, pushed into e_v·M.
            let u0 = proj
                .matrix
                .solve(&w)
                .expect("projection is surjective");
            let u = m.action[e].apply(&u0);
            summands.push(v);
            lifts.push(u);
        }
    }
    let term = standard_projective(&m.algebra, &summands);
    let mut matrix = Matrix::zero(f, m.dim, term.module.dim);
    for (col, &(pos, k)) in term.coords.iter().enumerate() {
        let image = m.action[k].apply(&lifts[pos]);
        for (i, c) in image.iter().enumerate() {
            matrix.set(i, col, c.clone());
        }
    }
    debug_assert_eq!(matrix.rank(), m.dim, "cover is not surjective");
    let map = ModuleMap {
        source: term.module.clone(),
        target: m.clone(),
        matrix,
    };
    Cover { term, map }
}

/// An injective envelope M ↪ E(M): the standard injective term and the
/// embedding.
pub struct Envelope {
    pub term: StandardTerm,
    pub map: ModuleMap,
}

/// Injective envelope by dualising a projective cover over the opposite
/// algebra; coordinates of the envelope agree with
/// [`standard_injective`].
pub fn injective_envelope(m: &Module) -> Envelope {
    assert_eq!(m.side, Side::Left, "envelope implemented for left modules");
    let op = m.algebra.opposite();
    let dual_left = m.dual().reinterpret_over(op.clone(), Side::Left);
    let cover = projective_cover(&dual_left);
    let summands = cover.term.summands.clone();
    let term = standard_injective(&m.algebra, &summands);
    // Dual of the cover: transpose, reading D(A^op·e_v) = D(e_v·A).
    let matrix = cover.map.matrix.transpose();
    debug_assert_eq!(term.module.dim, cover.term.module.dim);
    let map = ModuleMap {
        source: m.clone(),
        target: term.module.clone(),
        matrix,
    };
    debug_assert_eq!(map.matrix.rank(), m.dim, "envelope is not injective");
    Envelope { term, map }
}

/// A right inverse of a surjective matrix (columns solve for unit
/// vectors).
fn section_of(proj: &Matrix, f: crate::field::FieldSpec) -> Matrix {
    let id = Matrix::identity(f, proj.rows);
    proj.solve_matrix(&id).expect("matrix is surjective")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BasicAlgebra;
    use crate::parse::parse_presentation;

    fn build(text: &str) -> AlgebraRef {
        BasicAlgebra::build(&parse_presentation(text).unwrap()).unwrap()
    }

    fn a2() -> AlgebraRef {
        build("field Q\nvertices 1 2\narrow a 1 2\n")
    }

    fn almost_si() -> AlgebraRef {
        build("field Q\nvertices 1 2 3\narrow d 2 1\narrow a 1 2\narrow b 1 3\narrow t 3 1\nrelation a*d\nrelation d*a\nrelation b*t\nrelation t*b\n")
    }

    fn stp_zero() -> AlgebraRef {
        build("field Q\nvertices 1 2 3\narrow a 1 2\narrow b 2 1\narrow g 2 3\narrow d 3 2\nrelation d*b\nrelation a*b*a\nrelation d*g*d\nrelation b*a - g*d\n")
    }

    #[test]
    fn projective_dimensions_on_a2() {
        let a = a2();
        let p1 = Module::projective(&a, 0).unwrap();
        let p2 = Module::projective(&a, 1).unwrap();
        assert_eq!(p1.dim, 2);
        assert_eq!(p2.dim, 1);
        assert_eq!(p1.validate(), Ok(()));
    }

    #[test]
    fn injective_dimensions_on_a2() {
        // Dualised right path census: I_1 is simple, I_2 has dimension 2.
        let a = a2();
        assert_eq!(Module::injective(&a, 0).unwrap().dim, 1);
        assert_eq!(Module::injective(&a, 1).unwrap().dim, 2);
    }

    #[test]
    fn loewy_layers_of_projectives() {
        let a = almost_si();
        // P_1 has top S_1 and radical S_2 ⊕ S_3.
        let p1 = Module::projective(&a, 0).unwrap();
        assert_eq!(p1.dim, 3);
        assert_eq!(p1.top_multiplicities(), vec![1, 0, 0]);
        let (rad, _) = p1.radical_submodule();
        assert_eq!(rad.vertex_dims(), vec![0, 1, 1]);
        // P_2 = 2/1/3: socle S_3.
        let p2 = Module::projective(&a, 1).unwrap();
        assert_eq!(p2.socle_multiplicities(), vec![0, 0, 1]);
    }

    #[test]
    fn paper_loewy_diagrams_for_the_stp_zero_algebra() {
        let a = stp_zero();
        assert_eq!(a.dim, 12);
        let p2 = Module::projective(&a, 1).unwrap();
        assert_eq!(p2.dim, 5);
        let i3 = Module::injective(&a, 2).unwrap();
        assert_eq!(i3.dim, 5);
        let i1 = Module::injective(&a, 0).unwrap();
        assert_eq!(i1.dim, 3);
        // socle(P_2) ≅ S_3.
        assert_eq!(p2.socle_multiplicities(), vec![0, 0, 1]);
    }

    #[test]
    fn duality_is_involutive_and_preserves_dimension() {
        let a = almost_si();
        let p = Module::projective(&a, 1).unwrap();
        let dd = p.dual().dual();
        assert_eq!(dd.dim, p.dim);
        for k in 0..a.dim {
            assert_eq!(dd.action[k], p.action[k]);
        }
        let s = Module::simple(&a, 2).unwrap();
        let ds = s.dual();
        assert_eq!(ds.dim, 1);
        assert_eq!(ds.side, Side::Right);
    }

    #[test]
    fn hom_spaces_by_yoneda() {
        let a = a2();
        let p1 = Module::projective(&a, 0).unwrap();
        let p2 = Module::projective(&a, 1).unwrap();
        let s1 = Module::simple(&a, 0).unwrap();
        let s2 = Module::simple(&a, 1).unwrap();
        // Hom(P_i, M) = e_i M: maps out of P_1 into the simple projective
        // P_2 vanish, while Hom(P_2, P_1) is the socle line of P_1.
        assert_eq!(hom_basis(&p1, &p2).unwrap().len(), 0);
        assert_eq!(hom_basis(&p2, &p1).unwrap().len(), 1);
        assert_eq!(hom_basis(&s1, &s2).unwrap().len(), 0);
        assert_eq!(hom_basis(&s1, &s1).unwrap().len(), 1);
        // Yoneda against the regular module.
        let reg = Module::regular(&a);
        for v in 0..2 {
            let p = Module::projective(&a, v).unwrap();
            let expected = reg.vertex_dims()[v];
            assert_eq!(hom_basis(&p, &reg).unwrap().len(), expected);
        }
    }

    #[test]
    fn hom_maps_intertwine() {
        let a = almost_si();
        let p1 = Module::projective(&a, 0).unwrap();
        let p2 = Module::projective(&a, 1).unwrap();
        for f in hom_basis(&p1, &p2).unwrap() {
            f.validate().unwrap();
        }
    }

    #[test]
    fn cover_of_a_projective_is_an_isomorphism() {
        let a = almost_si();
        let p = Module::projective(&a, 2).unwrap();
        let cover = projective_cover(&p);
        assert_eq!(cover.term.summands, vec![2]);
        assert_eq!(cover.map.matrix.rank(), p.dim);
        assert_eq!(cover.term.module.dim, p.dim);
        cover.map.validate().unwrap();
    }

    #[test]
    fn cover_of_simple_is_the_projective() {
        let a = a2();
        let s1 = Module::simple(&a, 0).unwrap();
        let cover = projective_cover(&s1);
        assert_eq!(cover.term.summands, vec![0]);
        assert_eq!(cover.term.module.dim, 2);
        cover.map.validate().unwrap();
    }

    #[test]
    fn envelope_of_simple_is_the_injective() {
        let a = a2();
        let s2 = Module::simple(&a, 1).unwrap();
        let env = injective_envelope(&s2);
        assert_eq!(env.term.summands, vec![1]);
        assert_eq!(env.term.module.dim, 2);
        env.map.validate().unwrap();
    }

    #[test]
    fn envelope_of_the_regular_module_matches_socle_census() {
        let a = a2();
        let reg = Module::regular(&a);
        let socle = reg.socle_multiplicities();
        let env = injective_envelope(&reg);
        let mut counts = vec![0usize; 2];
        for &v in &env.term.summands {
            counts[v] += 1;
        }
        assert_eq!(counts, socle);
        env.map.validate().unwrap();
    }

    #[test]
    fn restricted_submodule_and_quotient_roundtrip() {
        let a = almost_si();
        let p = Module::projective(&a, 0).unwrap();
        let (rad, emb) = p.radical_submodule();
        emb.validate().unwrap();
        let span: Vec<Vec<Scalar>> = (0..rad.dim).map(|j| emb.matrix.column(j)).collect();
        let (top, proj) = p.quotient(&span);
        proj.validate().unwrap();
        assert_eq!(top.dim + rad.dim, p.dim);
    }
}
