//! Endomorphism algebras of module direct sums, packaged as new
//! [`BasicAlgebra`] values, plus restriction of modules to centraliser
//! subalgebras.
//!
//! The output algebra is used directly for homology — its projectives are
//! the hom columns — so no bound-quiver re-presentation is needed; the
//! diagnostic quiver of such an algebra comes from
//! [`BasicAlgebra::arrow_counts_from_radical`].

use crate::algebra::{AlgebraRef, BasicAlgebra};
use crate::decompose::{decompose, end_data, is_isomorphic, matrix_algebra_radical};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::{Matrix, Subspace};
use crate::module::{hom_basis, Module};

/// An ordered list of pairwise non-isomorphic indecomposable modules over
/// one algebra, each with a split local endomorphism ring.
pub struct SummandList {
    pub modules: Vec<Module>,
}

impl SummandList {
    /// Validates indecomposability (certified) and pairwise
    /// non-isomorphism.
    pub fn new(modules: Vec<Module>) -> Result<SummandList> {
        for m in &modules {
            let e = end_data(m)?;
            if e.semisimple_dim != 1 {
                return Err(Error::NotSplit(e.semisimple_dim));
            }
        }
        for i in 0..modules.len() {
            for j in (i + 1)..modules.len() {
                if is_isomorphic(&modules[i], &modules[j])? {
                    return Err(Error::Invalid(format!(
                        "summands {i} and {j} are isomorphic"
                    )));
                }
            }
        }
        Ok(SummandList { modules })
    }
}

/// Decomposes each input, merges, and deduplicates up to isomorphism,
/// preserving first-seen order.
pub fn normalize_summands(ms: &[Module]) -> Result<SummandList> {
    let mut out: Vec<Module> = Vec::new();
    for m in ms {
        for (part, _) in decompose(m)? {
            let mut seen = false;
            for kept in &out {
                if is_isomorphic(kept, &part)? {
                    seen = true;
                    break;
                }
            }
            if !seen {
                out.push(part);
            }
        }
    }
    SummandList::new(out)
}

/// End(⊕ X_i) as a split basic algebra: idempotents are the identity
/// maps, the radical is spanned by the non-invertible hom basis elements,
/// and structure constants come from composing intertwiners.
pub fn endomorphism_algebra(s: &SummandList) -> Result<AlgebraRef> {
    let m = s.modules.len();
    if m == 0 {
        return Err(Error::Invalid("empty summand list".into()));
    }
    let algebra0 = s.modules[0].algebra.clone();
    let f = algebra0.field;

    // Adapted basis per block (i → j): for i == j the identity followed by
    // a radical basis; off-diagonal blocks keep the hom basis as-is.
    // An element of block (i → j) has support (j, i).
    struct Block {
        maps: Vec<Matrix>,
        flat: Subspace,
    }
    let mut blocks: Vec<Vec<Block>> = Vec::new();
    for i in 0..m {
        let mut row = Vec::new();
        for j in 0..m {
            let homs = hom_basis(&s.modules[i], &s.modules[j])?;
            let maps: Vec<Matrix> = if i == j {
                let end_maps: Vec<Matrix> = homs.iter().map(|h| h.matrix.clone()).collect();
                let rad_coords = matrix_algebra_radical(f, &end_maps);
                if end_maps.len() - rad_coords.len() != 1 {
                    return Err(Error::NotSplit(end_maps.len() - rad_coords.len()));
                }
                let mut adapted = vec![Matrix::identity(f, s.modules[i].dim)];
                for coords in &rad_coords {
                    let mut acc = Matrix::zero(f, s.modules[i].dim, s.modules[i].dim);
                    for (t, c) in coords.iter().enumerate() {
                        if !f.is_zero(c) {
                            acc = acc.add(&end_maps[t].scale(c));
                        }
                    }
                    adapted.push(acc);
                }
                adapted
            } else {
                homs.iter().map(|h| h.matrix.clone()).collect()
            };
            let flat_vectors: Vec<Vec<Scalar>> = maps.iter().map(|x| x.flatten()).collect();
            let ambient = s.modules[j].dim * s.modules[i].dim.max(1);
            let flat = Subspace::from_spanning(f, ambient.max(1), &flat_vectors);
            row.push(Block { maps, flat });
        }
        blocks.push(row);
    }

    // Global basis: idempotents first, then the radical elements of every
    // block in (i, j) order.
    let mut labels: Vec<String> = Vec::new();
    let mut support: Vec<(usize, usize)> = Vec::new();
    let mut idempotents: Vec<usize> = Vec::new();
    let mut radical: Vec<usize> = Vec::new();
    // (block i, block j, index within block) per global basis element.
    let mut origin: Vec<(usize, usize, usize)> = Vec::new();
    for i in 0..m {
        idempotents.push(labels.len());
        labels.push(format!("id_{}", i + 1));
        support.push((i, i));
        origin.push((i, i, 0));
    }
    for i in 0..m {
        for j in 0..m {
            let start = if i == j { 1 } else { 0 };
            for t in start..blocks[i][j].maps.len() {
                radical.push(labels.len());
                labels.push(format!("f{}_{}_{}", i + 1, j + 1, t - start + 1));
                support.push((j, i));
                origin.push((i, j, t));
            }
        }
    }
    let dim = labels.len();

    // Structure constants: basis elements u: X_i → X_j and v: X_k → X_l
    // compose as u·v = u∘v when l == i, landing in block (k → j).
    let mut table: Vec<Vec<(usize, Scalar)>> = vec![vec![]; dim * dim];
    for (ui, &(i, j, t)) in origin.iter().enumerate() {
        for (vi, &(k, l, w)) in origin.iter().enumerate() {
            if l != i {
                continue;
            }
            let prod = blocks[i][j].maps[t].mul(&blocks[k][l].maps[w]);
            let target_block = &blocks[k][j];
            debug_assert!(target_block.flat.contains(&prod.flatten()));
            // Expand the composite in the block's own map list.
            let mut expansion: Vec<(usize, Scalar)> = Vec::new();
            let flat_cols: Vec<Vec<Scalar>> =
                target_block.maps.iter().map(|x| x.flatten()).collect();
            let ambient = flat_cols.first().map_or(1, |v| v.len());
            let mat = Matrix::from_columns(f, ambient, &flat_cols);
            let sol = mat
                .solve(&prod.flatten())
                .expect("composite expands in the block basis");
            for (bt, c) in sol.iter().enumerate() {
                if f.is_zero(c) {
                    continue;
                }
                let global = origin
                    .iter()
                    .position(|&(oi, oj, ot)| oi == k && oj == j && ot == bt)
                    .expect("block element is in the global basis");
                expansion.push((global, c.clone()));
            }
            table[ui * dim + vi] = expansion;
        }
    }

    let vertex_names: Vec<String> = (0..m).map(|i| format!("{}", i + 1)).collect();
    BasicAlgebra::from_parts(
        f,
        labels,
        vertex_names,
        support,
        idempotents,
        radical,
        None,
        table,
    )
}

/// eM as a module over the centraliser h = eAe at the given vertices:
/// the underlying space is Σ e_v·M with the inherited action.
pub fn restrict_module(m: &Module, verts: &[usize], h: &AlgebraRef) -> Result<Module> {
    if verts.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let a = &m.algebra;
    let f = a.field;
    let mut vs: Vec<usize> = verts.to_vec();
    vs.sort_unstable();
    vs.dedup();
    // The centraliser kept exactly the basis elements supported in
    // verts × verts, in ascending order; rebuild that index map.
    let kept: Vec<usize> = (0..a.dim)
        .filter(|&k| {
            let (t, s) = a.support[k];
            vs.contains(&t) && vs.contains(&s)
        })
        .collect();
    if kept.len() != h.dim {
        return Err(Error::AlgebraMismatch);
    }
    let mut span: Vec<Vec<Scalar>> = Vec::new();
    for &v in &vs {
        let e = a.idempotents[v];
        for j in 0..m.dim {
            span.push(m.action[e].column(j));
        }
    }
    let sub = Subspace::from_spanning(f, m.dim, &span);
    let basis = &sub.basis;
    let action: Vec<Matrix> = kept
        .iter()
        .map(|&k| {
            let image = m.action[k].mul(basis);
            basis
                .solve_matrix(&image)
                .expect("eM is invariant under eAe")
        })
        .collect();
    Ok(Module {
        algebra: h.clone(),
        side: m.side,
        dim: sub.dim(),
        action,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_presentation;
    use crate::resolution::{gldim, HomDim};

    fn build(text: &str) -> AlgebraRef {
        BasicAlgebra::build(&parse_presentation(text).unwrap()).unwrap()
    }

    fn a2() -> AlgebraRef {
        build("field Q\nvertices 1 2\narrow a 1 2\n")
    }

    fn lambda() -> AlgebraRef {
        build("field Q\nvertices 1\narrow x 1 1\narrow y 1 1\nrelation x*x\nrelation y*y\nrelation x*y - y*x\n")
    }

    #[test]
    fn normalization_deduplicates_and_splits() {
        let a = a2();
        let reg = Module::regular(&a);
        let s = normalize_summands(&[reg]).unwrap();
        assert_eq!(s.modules.len(), 2);
        let p1 = Module::projective(&a, 0).unwrap();
        let twice = normalize_summands(&[p1.clone(), p1]).unwrap();
        assert_eq!(twice.modules.len(), 1);
    }

    #[test]
    fn endomorphism_algebra_of_the_regular_module() {
        // End of the regular module has the algebra's dimension, and its
        // homological invariants agree.
        let a = a2();
        let parts = normalize_summands(&[Module::regular(&a)]).unwrap();
        let e = endomorphism_algebra(&parts).unwrap();
        assert_eq!(e.dim, a.dim);
        assert_eq!(e.num_vertices(), 2);
        assert_eq!(gldim(&e, 10).unwrap(), gldim(&a, 10).unwrap());
    }

    #[test]
    fn endomorphism_algebra_of_a_simple_is_the_ground_field() {
        let a = a2();
        let s = SummandList::new(vec![Module::simple(&a, 0).unwrap()]).unwrap();
        let e = endomorphism_algebra(&s).unwrap();
        assert_eq!(e.dim, 1);
    }

    #[test]
    fn lambda_summands_have_expected_dimensions() {
        let l = lambda();
        let reg = Module::regular(&l);
        let (rad, _) = reg.radical_submodule();
        let s = Module::simple(&l, 0).unwrap();
        let parts = normalize_summands(&[reg, rad, s]).unwrap();
        let dims: Vec<usize> = parts.modules.iter().map(|m| m.dim).collect();
        assert_eq!(dims, vec![4, 3, 1]);
        let e = endomorphism_algebra(&parts).unwrap();
        assert_eq!(e.num_vertices(), 3);
        // The paper's first endomorphism algebra: global dimension two.
        assert_eq!(gldim(&e, 10).unwrap(), HomDim::Finite(2));
    }

    #[test]
    fn restriction_census() {
        let a = a2();
        let reg = Module::regular(&a);
        // Restriction at all vertices is the whole module.
        let all = a.centraliser(&[0, 1]).unwrap();
        let r = restrict_module(&reg, &[0, 1], &all).unwrap();
        assert_eq!(r.dim, reg.dim);
        // Restriction of the projective A·e_1 at V = {2}: the basis
        // elements e_i A e_1 with i in V, here just the arrow.
        let h = a.centraliser(&[1]).unwrap();
        let p1 = Module::projective(&a, 0).unwrap();
        let rp = restrict_module(&p1, &[1], &h).unwrap();
        assert_eq!(rp.dim, 1);
        rp.validate().unwrap();
    }

    #[test]
    fn rejects_non_split_or_duplicate_summands() {
        let a = a2();
        let p1 = Module::projective(&a, 0).unwrap();
        assert!(SummandList::new(vec![p1.clone(), p1.clone()]).is_err());
        let sum = Module::direct_sum(&a, &[&p1, &p1]);
        assert!(SummandList::new(vec![sum]).is_err());
    }
}
