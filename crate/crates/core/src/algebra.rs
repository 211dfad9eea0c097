//! Split basic finite-dimensional algebras presented by quivers with
//! relations, plus the two constructions the invariant theory keeps
//! reusing: opposite algebras and centraliser subalgebras eAe.
//!
//! Conventions. Paths are stored in traversal order (`arrows[0]` is walked
//! first). The algebra product composes like functions: `p · q` means
//! "traverse q, then p", defined when `source(p) == target(q)`. A basis
//! element `b` then satisfies `b = e_i · b · e_j` with `i = target(b)` and
//! `j = source(b)`; that pair is its support. The left projective `A·e_j`
//! is spanned by the basis elements with source anchor `j`.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::{Matrix, Subspace};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

pub type AlgebraRef = Arc<BasicAlgebra>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Quiver> {
        let mut seen = std::collections::BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.clone()) {
                return Err(Error::Invalid(format!("duplicate vertex name `{v}`")));
            }
        }
        let index = |name: &str| -> Result<usize> {
            vertices
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::UnknownVertex(name.to_string()))
        };
        let mut names = std::collections::BTreeSet::new();
        let mut out = Vec::new();
        for (name, s, t) in arrows {
            if !names.insert(name.clone()) {
                return Err(Error::Invalid(format!("duplicate arrow name `{name}`")));
            }
            out.push(Arrow {
                name,
                source: index(&s)?,
                target: index(&t)?,
            });
        }
        Ok(Quiver {
            vertices,
            arrows: out,
        })
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    /// counts[i][j] = number of arrows i → j.
    pub fn arrow_counts(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut counts = vec![vec![0usize; n]; n];
        for a in &self.arrows {
            counts[a.source][a.target] += 1;
        }
        counts
    }

    pub fn reversed(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }
}

/// A directed path, arrows listed in traversal order; an empty arrow list
/// is the trivial path at `source == target`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<u32>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path {
            source: v,
            target: v,
            arrows: vec![],
        }
    }

    pub fn from_arrows(quiver: &Quiver, arrows: &[usize]) -> Result<Path> {
        assert!(!arrows.is_empty());
        for w in arrows.windows(2) {
            let (a, b) = (&quiver.arrows[w[0]], &quiver.arrows[w[1]]);
            if a.target != b.source {
                return Err(Error::NonComposablePath(format!(
                    "`{}` ends at {} but `{}` starts at {}",
                    a.name,
                    quiver.vertices[a.target],
                    b.name,
                    quiver.vertices[b.source]
                )));
            }
        }
        Ok(Path {
            source: quiver.arrows[arrows[0]].source,
            target: quiver.arrows[*arrows.last().unwrap()].target,
            arrows: arrows.iter().map(|&a| a as u32).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn label(&self, quiver: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e_{}", quiver.vertices[self.source])
        } else {
            self.arrows
                .iter()
                .map(|&a| quiver.arrows[a as usize].name.clone())
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

/// A k-linear combination of parallel paths of one common length ≥ 2.
#[derive(Debug, Clone)]
pub struct Relation {
    pub terms: Vec<(Scalar, Path)>,
}

impl Relation {
    pub fn validate(&self, field: &FieldSpec) -> Result<()> {
        if self.terms.is_empty() {
            return Err(Error::MalformedRelation("no terms".into()));
        }
        let first = &self.terms[0].1;
        if first.len() < 2 {
            return Err(Error::MalformedRelation(
                "paths in relations must have length at least 2".into(),
            ));
        }
        for (_, p) in &self.terms {
            if p.len() != first.len() {
                return Err(Error::MalformedRelation(
                    "terms of one relation must have equal length".into(),
                ));
            }
            if p.source != first.source || p.target != first.target {
                return Err(Error::MalformedRelation(
                    "terms of one relation must be parallel paths".into(),
                ));
            }
        }
        if self.terms.iter().all(|(c, _)| field.is_zero(c)) {
            return Err(Error::MalformedRelation(
                "relation has no nonzero coefficient".into(),
            ));
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.terms[0].1.len()
    }
}

pub const DEFAULT_DEGREE_CAP: usize = 50;

/// Budget on live monomials per degree; exceeding it aborts the ideal
/// closure with NotAdmissible at the degree reached.
const PATH_BUDGET: usize = 500_000;

#[derive(Debug, Clone)]
pub struct Presentation {
    pub field: FieldSpec,
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    pub degree_cap: usize,
}

impl Presentation {
    pub fn new(field: FieldSpec, quiver: Quiver, relations: Vec<Relation>) -> Presentation {
        Presentation {
            field,
            quiver,
            relations,
            degree_cap: DEFAULT_DEGREE_CAP,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.degree_cap < 2 {
            return Err(Error::InvalidParams("degree_cap must be at least 2".into()));
        }
        for r in &self.relations {
            r.validate(&self.field)?;
        }
        Ok(())
    }
}

/// A split basic algebra with a fixed basis, complete set of primitive
/// orthogonal idempotents, and support-homogeneous structure constants.
#[derive(Clone)]
pub struct BasicAlgebra {
    pub field: FieldSpec,
    pub dim: usize,
    pub labels: Vec<String>,
    pub vertex_names: Vec<String>,
    /// support[k] = (target, source) anchors of basis element k.
    pub support: Vec<(usize, usize)>,
    /// Basis index of e_v for each vertex v.
    pub idempotents: Vec<usize>,
    /// Basis indices spanning the radical.
    pub radical: Vec<usize>,
    /// Idempotents plus lifts of rad/rad²; generate the algebra.
    pub generators: Vec<usize>,
    pub quiver: Option<Quiver>,
    /// table[i * dim + j] = sparse expansion of b_i · b_j.
    table: Vec<Vec<(usize, Scalar)>>,
}

impl fmt::Debug for BasicAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BasicAlgebra(dim {}, {} vertices, over {})",
            self.dim,
            self.vertex_names.len(),
            self.field
        )
    }
}

impl BasicAlgebra {
    pub fn num_vertices(&self) -> usize {
        self.idempotents.len()
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.vertex_names
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    #[inline]
    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim + j]
    }

    /// Product of two coordinate vectors.
    pub fn mul_coords(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let f = self.field;
        let mut out = vec![f.zero(); self.dim];
        for (i, ca) in a.iter().enumerate() {
            if f.is_zero(ca) {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                if f.is_zero(cb) {
                    continue;
                }
                let c = f.mul(ca, cb);
                for (k, s) in self.mul_basis(i, j) {
                    out[*k] = f.add(&out[*k], &f.mul(&c, s));
                }
            }
        }
        out
    }

    pub fn one(&self) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim];
        for &e in &self.idempotents {
            v[e] = self.field.one();
        }
        v
    }

    /// Matrix of x ↦ b_k · x in the basis (columns indexed by x).
    pub fn left_mult_matrix(&self, k: usize) -> Matrix {
        let f = self.field;
        let mut m = Matrix::zero(f, self.dim, self.dim);
        for j in 0..self.dim {
            for (t, c) in self.mul_basis(k, j) {
                m.set(*t, j, c.clone());
            }
        }
        m
    }

    /// Matrix of x ↦ x · b_k in the basis.
    pub fn right_mult_matrix(&self, k: usize) -> Matrix {
        let f = self.field;
        let mut m = Matrix::zero(f, self.dim, self.dim);
        for i in 0..self.dim {
            for (t, c) in self.mul_basis(i, k) {
                m.set(*t, i, c.clone());
            }
        }
        m
    }

    pub fn structurally_eq(&self, other: &BasicAlgebra) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.support == other.support
            && self.idempotents == other.idempotents
            && self.table == other.table
    }

    /// Builds the bound quiver algebra kQ/I by degreewise ideal closure.
    ///
    /// For d = 2, 3, ... the degree-d part of the ideal is spanned by the
    /// degree-d relations together with one-arrow extensions of the
    /// degree-(d−1) part on either side; the construction stops at the
    /// first degree where no path survives, and errors with NotAdmissible
    /// if the cap is reached first.
    pub fn build(p: &Presentation) -> Result<AlgebraRef> {
        p.validate()?;
        let f = p.field;
        let q = &p.quiver;
        let nv = q.vertices.len();
        let na = q.arrows.len();

        // Per degree: live monomials (sorted), their residues in the
        // degree's quotient basis (None = dead), the quotient
        // representatives, and the ideal basis over live coordinates.
        struct Layer {
            monos: Vec<Path>,
            index: BTreeMap<Vec<u32>, usize>,
            /// residue[m] = coordinates of monomial m over `reps`.
            residue: Vec<Vec<(usize, Scalar)>>,
            /// positions (into monos) of quotient basis representatives.
            reps: Vec<usize>,
            /// ideal basis vectors over live coordinates.
            ideal: Vec<Vec<Scalar>>,
        }

        let mut layers: Vec<Layer> = Vec::new();
        // Degree 0: trivial paths, no ideal.
        {
            let monos: Vec<Path> = (0..nv).map(Path::trivial).collect();
            let index = monos
                .iter()
                .enumerate()
                .map(|(i, p)| (p.arrows.clone(), i))
                .collect();
            layers.push(Layer {
                residue: (0..nv).map(|i| vec![(i, f.one())]).collect(),
                reps: (0..nv).collect(),
                ideal: vec![],
                monos,
                index,
            });
        }
        // Degree 1: arrows, no ideal (relations have length ≥ 2).
        {
            let mut monos: Vec<Path> = (0..na)
                .map(|a| Path {
                    source: q.arrows[a].source,
                    target: q.arrows[a].target,
                    arrows: vec![a as u32],
                })
                .collect();
            monos.sort();
            let index: BTreeMap<Vec<u32>, usize> = monos
                .iter()
                .enumerate()
                .map(|(i, p)| (p.arrows.clone(), i))
                .collect();
            layers.push(Layer {
                residue: (0..monos.len()).map(|i| vec![(i, f.one())]).collect(),
                reps: (0..monos.len()).collect(),
                ideal: vec![],
                monos,
                index,
            });
        }

        let mut admissible_at: Option<usize> = None;
        for d in 2..=p.degree_cap {
            let prev = layers.last().unwrap();
            // Candidates: prepend an arrow to a live (= nonzero residue)
            // monomial of degree d−1; drop candidates whose degree-(d−1)
            // prefix is already dead.
            let mut monos: Vec<Path> = Vec::new();
            for (mi, m) in prev.monos.iter().enumerate() {
                if prev.residue[mi].is_empty() {
                    continue;
                }
                for (ai, a) in q.arrows.iter().enumerate() {
                    if a.target != m.source {
                        continue;
                    }
                    let mut arrows = Vec::with_capacity(d);
                    arrows.push(ai as u32);
                    arrows.extend_from_slice(&m.arrows);
                    let prefix = &arrows[..d - 1];
                    if let Some(&pi) = prev.index.get(prefix) {
                        if prev.residue[pi].is_empty() {
                            continue;
                        }
                    } else {
                        continue;
                    }
                    monos.push(Path {
                        source: a.source,
                        target: m.target,
                        arrows,
                    });
                }
            }
            monos.sort();
            monos.dedup();
            if monos.len() > PATH_BUDGET {
                return Err(Error::NotAdmissible {
                    cap: d,
                    surviving: monos.len(),
                });
            }
            let index: BTreeMap<Vec<u32>, usize> = monos
                .iter()
                .enumerate()
                .map(|(i, p)| (p.arrows.clone(), i))
                .collect();
            let n = monos.len();
            if n == 0 {
                admissible_at = Some(d);
                break;
            }

            let mut gens: Vec<Vec<Scalar>> = Vec::new();
            let mut push_terms = |terms: Vec<(Scalar, Vec<u32>)>, gens: &mut Vec<Vec<Scalar>>| {
                let mut v = vec![f.zero(); n];
                let mut nonzero = false;
                for (c, mono) in terms {
                    if let Some(&i) = index.get(&mono) {
                        v[i] = f.add(&v[i], &c);
                    }
                }
                for x in &v {
                    if !f.is_zero(x) {
                        nonzero = true;
                        break;
                    }
                }
                if nonzero {
                    gens.push(v);
                }
            };
            for r in &p.relations {
                if r.degree() == d {
                    push_terms(
                        r.terms
                            .iter()
                            .map(|(c, path)| (c.clone(), path.arrows.clone()))
                            .collect(),
                        &mut gens,
                    );
                }
            }
            for v in &prev.ideal {
                // Arrow extensions on both sides of each ideal vector.
                for (ai, a) in q.arrows.iter().enumerate() {
                    let mut pre: Vec<(Scalar, Vec<u32>)> = Vec::new();
                    let mut post: Vec<(Scalar, Vec<u32>)> = Vec::new();
                    for (mi, c) in v.iter().enumerate() {
                        if f.is_zero(c) {
                            continue;
                        }
                        let m = &prev.monos[mi];
                        if a.target == m.source {
                            let mut arrows = Vec::with_capacity(d);
                            arrows.push(ai as u32);
                            arrows.extend_from_slice(&m.arrows);
                            pre.push((c.clone(), arrows));
                        }
                        if a.source == m.target {
                            let mut arrows = m.arrows.clone();
                            arrows.push(ai as u32);
                            post.push((c.clone(), arrows));
                        }
                    }
                    if !pre.is_empty() {
                        push_terms(pre, &mut gens);
                    }
                    if !post.is_empty() {
                        push_terms(post, &mut gens);
                    }
                }
            }

            let (ideal, reps, residue) = if gens.is_empty() {
                (
                    vec![],
                    (0..n).collect::<Vec<_>>(),
                    (0..n).map(|i| vec![(i, f.one())]).collect::<Vec<_>>(),
                )
            } else {
                let m = Matrix::from_rows(f, gens);
                let rr = m.rref();
                let ideal: Vec<Vec<Scalar>> =
                    (0..rr.pivots.len()).map(|i| rr.matrix.row(i)).collect();
                let pivot_set: BTreeMap<usize, usize> = rr
                    .pivots
                    .iter()
                    .enumerate()
                    .map(|(row, &col)| (col, row))
                    .collect();
                let reps: Vec<usize> =
                    (0..n).filter(|c| !pivot_set.contains_key(c)).collect();
                let rep_pos: BTreeMap<usize, usize> =
                    reps.iter().enumerate().map(|(i, &c)| (c, i)).collect();
                let mut residue: Vec<Vec<(usize, Scalar)>> = Vec::with_capacity(n);
                for c in 0..n {
                    if let Some(&pos) = rep_pos.get(&c) {
                        residue.push(vec![(pos, f.one())]);
                    } else {
                        let row = pivot_set[&c];
                        let mut r: Vec<(usize, Scalar)> = Vec::new();
                        for (&rc, &pos) in &rep_pos {
                            let val = rr.matrix.get(row, rc);
                            if !f.is_zero(val) {
                                r.push((pos, f.neg(val)));
                            }
                        }
                        residue.push(r);
                    }
                }
                (ideal, reps, residue)
            };

            let quotient_dim = reps.len();
            layers.push(Layer {
                monos,
                index,
                residue,
                reps,
                ideal,
            });
            if quotient_dim == 0 {
                admissible_at = Some(d + 1);
                // All higher degrees die too: every longer path has a dead
                // degree-d prefix.
                break;
            }
        }

        let top_degree = match admissible_at {
            Some(d) => d,
            None => {
                let last = layers.last().unwrap();
                return Err(Error::NotAdmissible {
                    cap: p.degree_cap,
                    surviving: last.reps.len(),
                });
            }
        };

        // Global basis: quotient representatives, degree-major then lex.
        let mut basis_paths: Vec<Path> = Vec::new();
        let mut global_index: Vec<BTreeMap<Vec<u32>, usize>> = Vec::new();
        let mut offsets: Vec<usize> = Vec::new();
        for layer in &layers {
            offsets.push(basis_paths.len());
            let mut idx = BTreeMap::new();
            for &r in &layer.reps {
                idx.insert(layer.monos[r].arrows.clone(), basis_paths.len());
                basis_paths.push(layer.monos[r].clone());
            }
            global_index.push(idx);
        }
        let dim = basis_paths.len();

        // Residue of an arbitrary monomial, in global coordinates.
        let reduce = |path_arrows: &[u32], source: usize, target: usize| -> Vec<(usize, Scalar)> {
            let d = path_arrows.len();
            let _ = target;
            if d == 0 {
                // Trivial paths are distinguished by their vertex, not by
                // the (empty) arrow list.
                return vec![(source, f.one())];
            }
            if d >= layers.len() || d >= top_degree {
                return vec![];
            }
            let layer = &layers[d];
            match layer.index.get(path_arrows) {
                None => vec![],
                Some(&mi) => layer
                    .residue[mi]
                    .iter()
                    .map(|(pos, c)| (offsets[d] + pos, c.clone()))
                    .collect(),
            }
        };

        let f0 = f;
        let mut table: Vec<Vec<(usize, Scalar)>> = vec![vec![]; dim * dim];
        for (i, pi) in basis_paths.iter().enumerate() {
            for (j, pj) in basis_paths.iter().enumerate() {
                // b_i · b_j = "traverse b_j, then b_i".
                if pi.source != pj.target {
                    continue;
                }
                let mut arrows = pj.arrows.clone();
                arrows.extend_from_slice(&pi.arrows);
                table[i * dim + j] = reduce(&arrows, pj.source, pi.target);
            }
        }

        let support: Vec<(usize, usize)> = basis_paths
            .iter()
            .map(|p| (p.target, p.source))
            .collect();
        let labels: Vec<String> = basis_paths.iter().map(|p| p.label(q)).collect();
        let idempotents: Vec<usize> = (0..nv).collect();
        let radical: Vec<usize> = (nv..dim).collect();
        // Arrows survive any admissible ideal (relations have length ≥ 2)
        // and lift rad/rad².
        let arrow_gens: Vec<usize> = (0..dim)
            .filter(|&k| basis_paths[k].len() == 1)
            .collect();
        let mut generators = idempotents.clone();
        generators.extend(arrow_gens);

        let algebra = BasicAlgebra {
            field: f0,
            dim,
            labels,
            vertex_names: q.vertices.clone(),
            support,
            idempotents,
            radical,
            generators,
            quiver: Some(q.clone()),
            table,
        };
        algebra.validate()?;
        Ok(Arc::new(algebra))
    }

    /// The opposite algebra: same basis, reversed products, swapped
    /// support anchors. Applying it twice restores the original structure
    /// constants.
    pub fn opposite(&self) -> AlgebraRef {
        let dim = self.dim;
        let mut table = vec![vec![]; dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                table[i * dim + j] = self.mul_basis(j, i).to_vec();
            }
        }
        Arc::new(BasicAlgebra {
            field: self.field,
            dim,
            labels: self.labels.clone(),
            vertex_names: self.vertex_names.clone(),
            support: self.support.iter().map(|&(i, j)| (j, i)).collect(),
            idempotents: self.idempotents.clone(),
            radical: self.radical.clone(),
            generators: self.generators.clone(),
            quiver: self.quiver.as_ref().map(|q| q.reversed()),
            table,
        })
    }

    /// The centraliser subalgebra eAe with e = Σ_{v ∈ verts} e_v, on the
    /// basis elements supported inside verts × verts.
    pub fn centraliser(&self, verts: &[usize]) -> Result<AlgebraRef> {
        if verts.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let mut vs: Vec<usize> = verts.to_vec();
        vs.sort_unstable();
        vs.dedup();
        for &v in &vs {
            if v >= self.num_vertices() {
                return Err(Error::UnknownVertex(format!("#{v}")));
            }
        }
        let vmap: BTreeMap<usize, usize> = vs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let kept: Vec<usize> = (0..self.dim)
            .filter(|&k| {
                let (t, s) = self.support[k];
                vmap.contains_key(&t) && vmap.contains_key(&s)
            })
            .collect();
        let pos: BTreeMap<usize, usize> = kept.iter().enumerate().map(|(i, &k)| (k, i)).collect();
        let dim = kept.len();
        let mut table = vec![vec![]; dim * dim];
        for (i, &ki) in kept.iter().enumerate() {
            for (j, &kj) in kept.iter().enumerate() {
                let mut row = Vec::new();
                for (t, c) in self.mul_basis(ki, kj) {
                    match pos.get(t) {
                        Some(&p) => row.push((p, c.clone())),
                        // Support homogeneity keeps products of kept
                        // elements inside the kept block.
                        None => unreachable!("centraliser product escapes the vertex block"),
                    }
                }
                table[i * dim + j] = row;
            }
        }
        let support: Vec<(usize, usize)> = kept
            .iter()
            .map(|&k| {
                let (t, s) = self.support[k];
                (vmap[&t], vmap[&s])
            })
            .collect();
        let idempotents: Vec<usize> = vs.iter().map(|v| pos[&self.idempotents[*v]]).collect();
        let radical: Vec<usize> = kept
            .iter()
            .enumerate()
            .filter(|(_, k)| self.radical.contains(k))
            .map(|(i, _)| i)
            .collect();
        let algebra = BasicAlgebra {
            field: self.field,
            dim,
            labels: kept.iter().map(|&k| self.labels[k].clone()).collect(),
            vertex_names: vs.iter().map(|&v| self.vertex_names[v].clone()).collect(),
            support,
            idempotents: idempotents.clone(),
            generators: recompute_generators_raw(
                self.field,
                dim,
                &table,
                &idempotents,
                &radical,
            ),
            radical,
            quiver: None,
            table,
        };
        debug_assert!(algebra.validate().is_ok());
        Ok(Arc::new(algebra))
    }

    /// Assembles an algebra from raw parts (used by the endomorphism-algebra
    /// construction) and validates it.
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn from_parts(
        field: FieldSpec,
        labels: Vec<String>,
        vertex_names: Vec<String>,
        support: Vec<(usize, usize)>,
        idempotents: Vec<usize>,
        radical: Vec<usize>,
        quiver: Option<Quiver>,
        table: Vec<Vec<(usize, Scalar)>>,
    ) -> Result<AlgebraRef> {
        let dim = labels.len();
        let generators = recompute_generators_raw(field, dim, &table, &idempotents, &radical);
        let algebra = BasicAlgebra {
            field,
            dim,
            labels,
            vertex_names,
            support,
            idempotents,
            radical,
            generators,
            quiver,
            table,
        };
        algebra.validate()?;
        Ok(Arc::new(algebra))
    }

    /// Dimension of e_t A e_s blocks: dims[t][s].
    pub fn block_dims(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        let mut dims = vec![vec![0usize; n]; n];
        for &(t, s) in &self.support {
            dims[t][s] += 1;
        }
        dims
    }

    /// Arrow counts declared by the presentation. Errors when the algebra
    /// was not built from a quiver (use [`BasicAlgebra::arrow_counts_from_radical`]
    /// for those).
    pub fn arrow_counts(&self) -> Result<Vec<Vec<usize>>> {
        match &self.quiver {
            Some(q) => Ok(q.arrow_counts()),
            None => Err(Error::NoQuiverData),
        }
    }

    /// Diagnostic quiver extraction: counts[i][j] = dim e_j (rad/rad²) e_i,
    /// the number of arrows i → j of the Gabriel quiver.
    pub fn arrow_counts_from_radical(&self) -> Vec<Vec<usize>> {
        let f = self.field;
        let n = self.num_vertices();
        // rad² spanned by pairwise products of radical basis elements.
        let mut sq: Vec<Vec<Scalar>> = Vec::new();
        for &i in &self.radical {
            for &j in &self.radical {
                let prod = self.mul_basis(i, j);
                if !prod.is_empty() {
                    let mut v = vec![f.zero(); self.dim];
                    for (k, c) in prod {
                        v[*k] = f.add(&v[*k], c);
                    }
                    sq.push(v);
                }
            }
        }
        let radsq = Subspace::from_spanning(f, self.dim, &sq);
        let mut counts = vec![vec![0usize; n]; n];
        for i in 0..n {
            for j in 0..n {
                let block: Vec<usize> = self
                    .radical
                    .iter()
                    .copied()
                    .filter(|&k| self.support[k] == (j, i))
                    .collect();
                if block.is_empty() {
                    continue;
                }
                // dim of block modulo rad²: span block ∪ rad² minus dim rad².
                let mut vectors: Vec<Vec<Scalar>> = radsq.basis_vectors();
                for &k in &block {
                    let mut v = vec![f.zero(); self.dim];
                    v[k] = f.one();
                    vectors.push(v);
                }
                let total = Subspace::from_spanning(f, self.dim, &vectors);
                counts[i][j] = total.dim() - radsq.dim();
            }
        }
        counts
    }

    /// Necessary condition for an anti-automorphism fixing simples: for
    /// every ordered vertex pair the arrow counts in both directions agree.
    pub fn ext1_symmetry_necessary(&self) -> Result<bool> {
        let counts = self.arrow_counts()?;
        let n = counts.len();
        Ok((0..n).all(|i| (0..n).all(|j| counts[i][j] == counts[j][i])))
    }

    /// Structural sanity: associativity, idempotent completeness, support
    /// homogeneity, nilpotent radical ideal, one-dimensional corner
    /// quotients (split basic).
    pub fn validate(&self) -> Result<()> {
        let f = self.field;
        let dim = self.dim;
        if self.support.len() != dim || self.labels.len() != dim {
            return Err(Error::Invalid("inconsistent basis bookkeeping".into()));
        }
        // Idempotents: orthogonal, squaring to themselves, summing to 1.
        for (vi, &ei) in self.idempotents.iter().enumerate() {
            for (vj, &ej) in self.idempotents.iter().enumerate() {
                let prod = self.mul_basis(ei, ej);
                if vi == vj {
                    if !(prod.len() == 1 && prod[0].0 == ei && f.is_one(&prod[0].1)) {
                        return Err(Error::Invalid(format!(
                            "idempotent {vi} does not square to itself"
                        )));
                    }
                } else if !prod.is_empty() {
                    return Err(Error::Invalid(format!(
                        "idempotents {vi}, {vj} are not orthogonal"
                    )));
                }
            }
        }
        let one = self.one();
        for k in 0..dim {
            let mut unit = vec![f.zero(); dim];
            unit[k] = f.one();
            if self.mul_coords(&one, &unit) != unit || self.mul_coords(&unit, &one) != unit {
                return Err(Error::Invalid(format!(
                    "idempotents do not sum to the identity at basis {k}"
                )));
            }
        }
        // Support homogeneity: b_i·b_j lands in the (target(i), source(j))
        // block, and vanishes unless source(i) == target(j).
        for i in 0..dim {
            for j in 0..dim {
                let (ti, si) = self.support[i];
                let (tj, sj) = self.support[j];
                for (k, _) in self.mul_basis(i, j) {
                    if si != tj || self.support[*k] != (ti, sj) {
                        return Err(Error::Invalid(format!(
                            "product {i}·{j} violates support homogeneity"
                        )));
                    }
                }
            }
        }
        // Associativity on composable triples; exhaustive up to dim 64.
        let triples: Vec<(usize, usize, usize)> = {
            let mut all = Vec::new();
            for i in 0..dim {
                for j in 0..dim {
                    if self.support[i].1 != self.support[j].0 {
                        continue;
                    }
                    for k in 0..dim {
                        if self.support[j].1 != self.support[k].0 {
                            continue;
                        }
                        all.push((i, j, k));
                    }
                }
            }
            if dim <= 64 {
                all
            } else {
                // Deterministic sample.
                all.into_iter().step_by(7).collect()
            }
        };
        for (i, j, k) in triples {
            let mut bi = vec![f.zero(); dim];
            bi[i] = f.one();
            let mut bj = vec![f.zero(); dim];
            bj[j] = f.one();
            let mut bk = vec![f.zero(); dim];
            bk[k] = f.one();
            let lhs = self.mul_coords(&self.mul_coords(&bi, &bj), &bk);
            let rhs = self.mul_coords(&bi, &self.mul_coords(&bj, &bk));
            if lhs != rhs {
                return Err(Error::Invalid(format!(
                    "associativity fails on basis triple ({i},{j},{k})"
                )));
            }
        }
        // Radical span: closed under products with everything, nilpotent.
        let rad_set: std::collections::BTreeSet<usize> = self.radical.iter().copied().collect();
        for &r in &self.radical {
            for b in 0..dim {
                for (k, _) in self.mul_basis(r, b).iter().chain(self.mul_basis(b, r)) {
                    if !rad_set.contains(k) {
                        return Err(Error::Invalid(
                            "radical span is not a two-sided ideal".into(),
                        ));
                    }
                }
            }
        }
        // Nilpotency: powers of the radical shrink to zero.
        let mut current: Vec<Vec<Scalar>> = self
            .radical
            .iter()
            .map(|&r| {
                let mut v = vec![f.zero(); dim];
                v[r] = f.one();
                v
            })
            .collect();
        let mut steps = 0;
        while !current.is_empty() {
            steps += 1;
            if steps > dim + 1 {
                return Err(Error::Invalid("radical span is not nilpotent".into()));
            }
            let mut next: Vec<Vec<Scalar>> = Vec::new();
            for v in &current {
                for &r in &self.radical {
                    let mut unit = vec![f.zero(); dim];
                    unit[r] = f.one();
                    let prod = self.mul_coords(v, &unit);
                    if prod.iter().any(|c| !f.is_zero(c)) {
                        next.push(prod);
                    }
                }
            }
            let sub = Subspace::from_spanning(f, dim, &next);
            current = sub.basis_vectors();
        }
        // Split basic: each corner e_v A e_v has exactly one non-radical
        // basis element (the idempotent).
        for v in 0..self.num_vertices() {
            let non_rad = (0..dim)
                .filter(|&k| self.support[k] == (v, v) && !rad_set.contains(&k))
                .count();
            if non_rad != 1 {
                return Err(Error::Invalid(format!(
                    "corner at vertex {v} has semisimple quotient of dimension {non_rad}"
                )));
            }
        }
        Ok(())
    }
}

/// Generating set: idempotents plus basis-element lifts of rad/rad².
fn recompute_generators_raw(
    field: FieldSpec,
    dim: usize,
    table: &[Vec<(usize, Scalar)>],
    idempotents: &[usize],
    radical: &[usize],
) -> Vec<usize> {
    let f = field;
    let mut sq: Vec<Vec<Scalar>> = Vec::new();
    for &i in radical {
        for &j in radical {
            let prod = &table[i * dim + j];
            if !prod.is_empty() {
                let mut v = vec![f.zero(); dim];
                for (k, c) in prod {
                    v[*k] = f.add(&v[*k], c);
                }
                sq.push(v);
            }
        }
    }
    let mut span = Subspace::from_spanning(f, dim, &sq);
    let mut gens: Vec<usize> = idempotents.to_vec();
    for &r in radical {
        let mut v = vec![f.zero(); dim];
        v[r] = f.one();
        if !span.contains(&v) {
            gens.push(r);
            let mut vectors = span.basis_vectors();
            vectors.push(v);
            span = Subspace::from_spanning(f, dim, &vectors);
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_presentation;

    fn build(text: &str) -> AlgebraRef {
        BasicAlgebra::build(&parse_presentation(text).unwrap()).unwrap()
    }

    pub(crate) const A2: &str = "field Q\nvertices 1 2\narrow a 1 2\n";
    pub(crate) const ALMOST_SI: &str = "field Q\nvertices 1 2 3\narrow d 2 1\narrow a 1 2\narrow b 1 3\narrow t 3 1\nrelation a*d\nrelation d*a\nrelation b*t\nrelation t*b\n";
    pub(crate) const LAMBDA: &str = "field Q\nvertices 1\narrow x 1 1\narrow y 1 1\nrelation x*x\nrelation y*y\nrelation x*y - y*x\n";

    #[test]
    fn a2_path_algebra() {
        let a = build(A2);
        assert_eq!(a.dim, 3);
        assert_eq!(a.labels, vec!["e_1", "e_2", "a"]);
        // The arrow is supported at (target, source) = (2, 1).
        assert_eq!(a.support[2], (1, 0));
    }

    #[test]
    fn commuting_loops_modulo_squares() {
        let a = build(LAMBDA);
        // Surviving monomials 1, x, y, xy.
        assert_eq!(a.dim, 4);
    }

    #[test]
    fn three_vertex_cycle_with_four_relations() {
        let a = build(ALMOST_SI);
        assert_eq!(a.dim, 9);
        // Each projective Ae_i has dimension 3 (path census per source).
        let dims = a.block_dims();
        for v in 0..3 {
            let col: usize = (0..3).map(|t| dims[t][v]).sum();
            assert_eq!(col, 3);
        }
    }

    #[test]
    fn opposite_involutive_and_support_swapped() {
        let a = build(A2);
        let op = a.opposite();
        assert_eq!(op.dim, 3);
        assert_eq!(op.support[2], (0, 1));
        let opop = op.opposite();
        assert!(a.structurally_eq(&opop));
        let b = build(ALMOST_SI);
        assert_eq!(b.opposite().dim, 9);
    }

    #[test]
    fn centraliser_corners() {
        let a = build(A2);
        let c1 = a.centraliser(&[0]).unwrap();
        assert_eq!(c1.dim, 1);
        let c12 = a.centraliser(&[0, 1]).unwrap();
        assert_eq!(c12.dim, 3);
        assert!(c12.structurally_eq(&a));
        assert!(a.centraliser(&[]).is_err());
    }

    #[test]
    fn centraliser_commutes_with_opposite() {
        let a = build(ALMOST_SI);
        let verts = [1usize, 2];
        let lhs = a.centraliser(&verts).unwrap().opposite();
        let rhs = a.opposite().centraliser(&verts).unwrap();
        assert!(lhs.structurally_eq(&rhs));
    }

    #[test]
    fn nakayama_rad2_centraliser_loses_the_long_path() {
        let a = build(
            "field Q\nvertices 1 2 3\narrow a 1 2\narrow b 2 3\narrow c 3 1\nrelation a*b\nrelation b*c\nrelation c*a\n",
        );
        assert_eq!(a.dim, 6);
        let c = a.centraliser(&[0, 1]).unwrap();
        // e1, e2 and the single arrow between them survive; the length-2
        // path through vertex 3 dies with rad² = 0.
        assert_eq!(c.dim, 3);
    }

    #[test]
    fn not_admissible_without_relations_on_a_loop() {
        let p = parse_presentation("field Q\nvertices 1\narrow x 1 1\ncap 6\n").unwrap();
        match BasicAlgebra::build(&p) {
            Err(Error::NotAdmissible { .. }) => {}
            other => panic!("expected NotAdmissible, got {other:?}"),
        }
    }

    #[test]
    fn malformed_relations_are_rejected() {
        // Non-parallel terms.
        let p = parse_presentation(
            "field Q\nvertices 1 2 3\narrow a 1 2\narrow b 2 3\narrow c 2 1\nrelation a*b - a*c\n",
        );
        match p.map(|p| BasicAlgebra::build(&p)) {
            Ok(Err(Error::MalformedRelation(_))) | Err(Error::MalformedRelation(_)) => {}
            other => panic!("expected MalformedRelation, got {other:?}"),
        }
    }

    #[test]
    fn arrow_symmetry_condition() {
        let dual_ext = build(
            "field Q\nvertices 1 2 3\narrow a 1 2\narrow as 2 1\narrow b 3 2\narrow bs 2 3\nrelation a*as\nrelation b*bs\nrelation a*bs\nrelation b*as\n",
        );
        assert!(dual_ext.ext1_symmetry_necessary().unwrap());
        let one_way = build(A2);
        assert!(!one_way.ext1_symmetry_necessary().unwrap());
        let loops = build(LAMBDA);
        assert!(loops.ext1_symmetry_necessary().unwrap());
    }

    #[test]
    fn extracted_arrow_counts_match_declared_counts() {
        for text in [A2, ALMOST_SI, LAMBDA] {
            let a = build(text);
            let declared = a.arrow_counts().unwrap();
            assert_eq!(declared, a.arrow_counts_from_radical());
        }
    }

    #[test]
    fn dimension_matches_block_census() {
        let a = build(ALMOST_SI);
        let dims = a.block_dims();
        let total: usize = dims.iter().flatten().sum();
        assert_eq!(total, a.dim);
    }
}
