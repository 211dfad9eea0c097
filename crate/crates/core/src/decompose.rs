//! Krull–Schmidt machinery: radicals of endomorphism algebras,
//! isomorphism testing, and direct-sum decomposition via Fitting
//! projections.
//!
//! Indecomposability is always certified (End/rad one-dimensional), never
//! inferred from a failed search. The splitting search itself is
//! deterministic first (catalogue peeling against the algebra's
//! projectives and injectives, eigenvalue and minimal-polynomial splits on
//! the endomorphism basis) and falls back to seeded random small-integer
//! combinations within a fixed budget; exhaustion reports SplitFailure.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::{Matrix, Subspace};
use crate::module::{hom_basis, Module, ModuleMap};
use num::bigint::BigInt;
use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Budget of Fitting candidates per module, as in the design notes.
pub const SPLIT_BUDGET: usize = 200;

/// Endomorphism data of one module: a basis of End(M) and the radical as
/// a subspace of flattened matrices.
pub struct EndData {
    pub maps: Vec<Matrix>,
    pub rad_flat: Subspace,
    /// dim End(M) / rad End(M).
    pub semisimple_dim: usize,
}

/// Radical of a matrix algebra given by a spanning basis, as coordinate
/// vectors over that basis.
///
/// Characteristic zero uses the trace-form kernel. Characteristic p uses
/// the p-power trace refinement chain: with f_i(z) = Tr(Z^{p^i}) / p^i
/// mod p evaluated on integral lifts, repeatedly cut down by
/// {x : f_i(x·y) = 0 for all y} for p^i up to the matrix size.
pub fn matrix_algebra_radical(field: FieldSpec, basis: &[Matrix]) -> Vec<Vec<Scalar>> {
    let f = field;
    let k = basis.len();
    if k == 0 {
        return vec![];
    }
    let n = basis[0].rows;
    match field {
        FieldSpec::Rationals => {
            let mut rows = Vec::with_capacity(k);
            for y in basis {
                let row: Vec<Scalar> = basis.iter().map(|x| x.mul(y).trace()).collect();
                rows.push(row);
            }
            Matrix::from_rows(f, rows).kernel_basis()
        }
        FieldSpec::PrimeField(p) => {
            // current = coordinate basis of the surviving subspace A_i.
            let mut current: Vec<Vec<Scalar>> = (0..k)
                .map(|i| {
                    let mut v = vec![f.zero(); k];
                    v[i] = f.one();
                    v
                })
                .collect();
            let mut level = 0u32;
            let mut pl: u64 = 1;
            while pl <= n as u64 {
                if current.is_empty() {
                    break;
                }
                let mats: Vec<Matrix> = current
                    .iter()
                    .map(|c| combine(f, basis, c))
                    .collect();
                let mut rows = Vec::with_capacity(mats.len());
                for y in &mats {
                    let row: Vec<Scalar> = mats
                        .iter()
                        .map(|x| p_power_trace(&x.mul(y), p, level))
                        .collect();
                    rows.push(row);
                }
                let ker = Matrix::from_rows(f, rows).kernel_basis();
                current = ker
                    .iter()
                    .map(|coeffs| {
                        let mut v = vec![f.zero(); k];
                        for (ci, c) in coeffs.iter().enumerate() {
                            for (vi, cur) in current[ci].iter().enumerate() {
                                v[vi] = f.add(&v[vi], &f.mul(c, cur));
                            }
                        }
                        v
                    })
                    .collect();
                level += 1;
                pl = pl.saturating_mul(p);
            }
            current
        }
    }
}

fn combine(f: FieldSpec, basis: &[Matrix], coords: &[Scalar]) -> Matrix {
    let n = basis[0].rows;
    let mut acc = Matrix::zero(f, n, n);
    for (i, c) in coords.iter().enumerate() {
        if !f.is_zero(c) {
            acc = acc.add(&basis[i].scale(c));
        }
    }
    acc
}

/// f_level(z) = Tr(lift(z)^{p^level}) / p^level mod p, on integral lifts.
fn p_power_trace(z: &Matrix, p: u64, level: u32) -> Scalar {
    let n = z.rows;
    let mut lift: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            row.push(z.field.lift(z.get(i, j)));
        }
        lift.push(row);
    }
    let e = p.pow(level);
    let powed = bigint_matrix_pow(&lift, e as usize);
    let mut tr = BigInt::zero();
    for (i, row) in powed.iter().enumerate() {
        tr += &row[i];
    }
    let divisor = BigInt::from(p).pow(level);
    let (q, r) = num::Integer::div_rem(&tr, &divisor);
    assert!(r.is_zero(), "p-power trace is not divisible by p^level");
    let modp = num::Integer::mod_floor(&q, &BigInt::from(p));
    let digits = modp.to_u64_digits();
    Scalar::Mod(if digits.1.is_empty() { 0 } else { digits.1[0] })
}

fn bigint_matrix_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[k][j].is_zero() {
                    continue;
                }
                let prod = &a[i][k] * &b[k][j];
                out[i][j] += prod;
            }
        }
    }
    out
}

fn bigint_matrix_pow(a: &[Vec<BigInt>], mut e: usize) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut acc: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = bigint_matrix_mul(&acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = bigint_matrix_mul(&base, &base);
        }
    }
    acc
}

pub fn end_data(m: &Module) -> Result<EndData> {
    let f = m.algebra.field;
    let maps: Vec<Matrix> = hom_basis(m, m)?.into_iter().map(|h| h.matrix).collect();
    let rad_coords = matrix_algebra_radical(f, &maps);
    let rad_vectors: Vec<Vec<Scalar>> = rad_coords
        .iter()
        .map(|c| combine(f, &maps, c).flatten())
        .collect();
    let rad_flat = Subspace::from_spanning(f, m.dim * m.dim, &rad_vectors);
    let semisimple_dim = maps.len() - rad_flat.dim();
    Ok(EndData {
        maps,
        rad_flat,
        semisimple_dim,
    })
}

/// Certified indecomposability: End(M)/rad is one-dimensional. (For split
/// algebras this is exactly indecomposability.)
pub fn is_indecomposable(m: &Module) -> Result<bool> {
    if m.dim == 0 {
        return Ok(false);
    }
    Ok(end_data(m)?.semisimple_dim == 1)
}

/// Isomorphism test for two modules already known indecomposable: the
/// pairing Hom(M,N) × Hom(N,M) → End(M) lands in the radical exactly when
/// M and N are non-isomorphic, so a composite outside rad(End M) is an
/// isomorphism certificate.
fn indec_iso(m: &Module, n: &Module, end_m: &EndData) -> Result<bool> {
    if m.dim != n.dim || m.vertex_dims() != n.vertex_dims() {
        return Ok(false);
    }
    let to_n = hom_basis(m, n)?;
    let to_m = hom_basis(n, m)?;
    for f_ab in &to_m {
        for g in &to_n {
            let u = f_ab.matrix.mul(&g.matrix);
            if !end_m.rad_flat.contains(&u.flatten()) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Finds an explicit splitting of a copy of the indecomposable `k` inside
/// `m`, if one exists: returns the idempotent of End(m) projecting onto
/// that copy.
fn peel_idempotent(m: &Module, k: &Module, end_k: &EndData) -> Result<Option<Matrix>> {
    if k.dim > m.dim || k.dim == 0 {
        return Ok(None);
    }
    let vk = k.vertex_dims();
    let vm = m.vertex_dims();
    if vk.iter().zip(&vm).any(|(a, b)| a > b) {
        return Ok(None);
    }
    let into = hom_basis(k, m)?;
    let back = hom_basis(m, k)?;
    for f_in in &into {
        for g_out in &back {
            let u = g_out.matrix.mul(&f_in.matrix); // End(k)
            if end_k.rad_flat.contains(&u.flatten()) {
                continue;
            }
            let u_inv = match u.inverse() {
                Some(inv) => inv,
                // Outside the radical of a local ring is invertible; a
                // failure here would mean end_k is not local.
                None => continue,
            };
            let eps = f_in.matrix.mul(&u_inv).mul(&g_out.matrix);
            debug_assert_eq!(eps.mul(&eps), eps);
            return Ok(Some(eps));
        }
    }
    Ok(None)
}

fn split_by_projector(m: &Module, eps: &Matrix) -> ((Module, ModuleMap), (Module, ModuleMap)) {
    let image: Vec<Vec<Scalar>> = (0..m.dim).map(|j| eps.column(j)).collect();
    let kernel = eps.kernel_basis();
    (m.submodule(&image), m.submodule(&kernel))
}

/// Direct-sum decomposition into pairwise non-isomorphic indecomposables
/// with multiplicities. Summands have certified local endomorphism rings.
pub fn decompose(m: &Module) -> Result<Vec<(Module, usize)>> {
    let mut pieces: Vec<Module> = Vec::new();
    decompose_into(m, &mut pieces)?;
    // Merge isomorphic pieces.
    let mut out: Vec<(Module, usize, EndData)> = Vec::new();
    for p in pieces {
        let mut merged = false;
        for (rep, count, end_rep) in out.iter_mut() {
            if indec_iso(rep, &p, end_rep)? {
                *count += 1;
                merged = true;
                break;
            }
        }
        if !merged {
            let e = end_data(&p)?;
            out.push((p, 1, e));
        }
    }
    Ok(out.into_iter().map(|(m, c, _)| (m, c)).collect())
}

fn decompose_into(m: &Module, pieces: &mut Vec<Module>) -> Result<()> {
    if m.dim == 0 {
        return Ok(());
    }
    let end = end_data(m)?;
    if end.semisimple_dim == 1 {
        pieces.push(m.clone());
        return Ok(());
    }

    // Stage 1: peel catalogue summands (projectives, then injectives).
    let nv = m.algebra.num_vertices();
    for v in 0..nv {
        for make_inj in [false, true] {
            let k = if make_inj {
                Module::injective(&m.algebra, v)?
            } else {
                Module::projective(&m.algebra, v)?
            };
            if k.dim == 0 || k.dim > m.dim {
                continue;
            }
            let end_k = end_data(&k)?;
            if end_k.semisimple_dim != 1 {
                continue;
            }
            if let Some(eps) = peel_idempotent(m, &k, &end_k)? {
                let ((im, _), (ker, _)) = split_by_projector(m, &eps);
                decompose_into(&im, pieces)?;
                decompose_into(&ker, pieces)?;
                return Ok(());
            }
        }
    }

    // Stage 2: Fitting splits from endomorphism candidates.
    let f = m.algebra.field;
    let eigen_candidates = f.eigenvalue_candidates();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_5eed);
    let mut tried = 0usize;
    let mut candidate_at = |idx: usize, rng: &mut ChaCha8Rng| -> Matrix {
        if idx < end.maps.len() {
            end.maps[idx].clone()
        } else {
            let mut acc = Matrix::zero(f, m.dim, m.dim);
            for b in &end.maps {
                let c: i64 = rng.gen_range(-3..=3);
                if c != 0 {
                    acc = acc.add(&b.scale(&f.int(c)));
                }
            }
            acc
        }
    };
    while tried < SPLIT_BUDGET {
        let x = candidate_at(tried, &mut rng);
        tried += 1;
        if x.is_zero() {
            continue;
        }
        let mu = x.min_poly();
        // Shifted Fitting projections at candidate eigenvalues.
        for c in mu.roots_among(&eigen_candidates) {
            let shifted = if f.is_zero(&c) {
                x.clone()
            } else {
                x.sub(&Matrix::identity(f, m.dim).scale(&c))
            };
            let power = shifted.pow(m.dim.max(1));
            let ker = power.kernel_basis();
            if !ker.is_empty() && ker.len() < m.dim {
                let image: Vec<Vec<Scalar>> = (0..m.dim).map(|j| power.column(j)).collect();
                let (a, _) = m.submodule(&ker);
                let (b, _) = m.submodule(&image);
                debug_assert_eq!(a.dim + b.dim, m.dim);
                decompose_into(&a, pieces)?;
                decompose_into(&b, pieces)?;
                return Ok(());
            }
        }
        // Coprime splits read off the multiplicity structure of μ.
        if let Some((u, v)) = mu.coprime_split() {
            let ku = x.eval_poly(&u).kernel_basis();
            let kv = x.eval_poly(&v).kernel_basis();
            if !ku.is_empty() && !kv.is_empty() && ku.len() + kv.len() == m.dim {
                let (a, _) = m.submodule(&ku);
                let (b, _) = m.submodule(&kv);
                decompose_into(&a, pieces)?;
                decompose_into(&b, pieces)?;
                return Ok(());
            }
        }
    }
    Err(Error::SplitFailure {
        dim: m.dim,
        candidates: SPLIT_BUDGET,
    })
}

/// Isomorphism of finite-dimensional modules over the same algebra and
/// side: dimension prechecks, then indecomposable matching through
/// Krull–Schmidt decompositions.
pub fn is_isomorphic(m: &Module, n: &Module) -> Result<bool> {
    if !m.same_algebra(n) || m.side != n.side {
        return Err(Error::AlgebraMismatch);
    }
    if m.dim != n.dim {
        return Ok(false);
    }
    if m.dim == 0 {
        return Ok(true);
    }
    if m.vertex_dims() != n.vertex_dims() {
        return Ok(false);
    }
    let em = end_data(m)?;
    let en = end_data(n)?;
    if em.semisimple_dim != en.semisimple_dim {
        return Ok(false);
    }
    if em.semisimple_dim == 1 {
        return indec_iso(m, n, &em);
    }
    let dm = decompose(m)?;
    let mut dn = decompose(n)?;
    if dm.len() != dn.len() {
        return Ok(false);
    }
    for (part, mult) in &dm {
        let end_part = end_data(part)?;
        let mut found = None;
        for (i, (other, other_mult)) in dn.iter().enumerate() {
            if mult == other_mult && indec_iso(part, other, &end_part)? {
                found = Some(i);
                break;
            }
        }
        match found {
            Some(i) => {
                dn.remove(i);
            }
            None => return Ok(false),
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{AlgebraRef, BasicAlgebra};
    use crate::parse::parse_presentation;

    fn build(text: &str) -> AlgebraRef {
        BasicAlgebra::build(&parse_presentation(text).unwrap()).unwrap()
    }

    fn a2() -> AlgebraRef {
        build("field Q\nvertices 1 2\narrow a 1 2\n")
    }

    fn lambda(field: &str) -> AlgebraRef {
        build(&format!(
            "field {field}\nvertices 1\narrow x 1 1\narrow y 1 1\nrelation x*x\nrelation y*y\nrelation x*y - y*x\n"
        ))
    }

    #[test]
    fn radical_of_full_matrix_algebra_is_zero() {
        let a = a2();
        let p1 = Module::projective(&a, 0).unwrap();
        let sum = Module::direct_sum(&a, &[&p1, &p1]);
        let end = end_data(&sum).unwrap();
        assert_eq!(end.maps.len(), 4);
        assert_eq!(end.rad_flat.dim(), 0);
        assert_eq!(end.semisimple_dim, 4);
    }

    #[test]
    fn radical_of_local_commutative_algebra() {
        // End of the regular module of k[x,y]/(x²,y²) is the algebra
        // itself: radical has dimension 3, over Q and over F2 (the F2 case
        // exercises the p-power refinement: the plain trace form vanishes
        // identically there).
        for field in ["Q", "F 2"] {
            let l = lambda(field);
            let reg = Module::regular(&l);
            let end = end_data(&reg).unwrap();
            assert_eq!(end.maps.len(), 4, "field {field}");
            assert_eq!(end.rad_flat.dim(), 3, "field {field}");
            assert_eq!(end.semisimple_dim, 1, "field {field}");
        }
    }

    #[test]
    fn simples_are_indecomposable_and_distinct() {
        let a = a2();
        let s1 = Module::simple(&a, 0).unwrap();
        let s2 = Module::simple(&a, 1).unwrap();
        assert!(is_indecomposable(&s1).unwrap());
        assert!(!is_isomorphic(&s1, &s2).unwrap());
        assert!(is_isomorphic(&s1, &s1).unwrap());
    }

    #[test]
    fn decompose_simple_module() {
        let a = a2();
        let s = Module::simple(&a, 0).unwrap();
        let d = decompose(&s).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].1, 1);
        assert_eq!(d[0].0.dim, 1);
    }

    #[test]
    fn decompose_square_of_a_projective() {
        let a = a2();
        let p1 = Module::projective(&a, 0).unwrap();
        let sum = Module::direct_sum(&a, &[&p1, &p1]);
        let d = decompose(&sum).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].1, 2);
        assert!(is_isomorphic(&d[0].0, &p1).unwrap());
    }

    #[test]
    fn decompose_regular_module_of_a2() {
        let a = a2();
        let reg = Module::regular(&a);
        let mut d = decompose(&reg).unwrap();
        d.sort_by_key(|(m, _)| m.dim);
        assert_eq!(d.len(), 2);
        assert_eq!((d[0].0.dim, d[0].1), (1, 1));
        assert_eq!((d[1].0.dim, d[1].1), (2, 1));
        let p1 = Module::projective(&a, 0).unwrap();
        let p2 = Module::projective(&a, 1).unwrap();
        assert!(is_isomorphic(&d[1].0, &p1).unwrap());
        assert!(is_isomorphic(&d[0].0, &p2).unwrap());
    }

    #[test]
    fn decompose_is_idempotent_on_summands() {
        let a = a2();
        let reg = Module::regular(&a);
        for (part, _) in decompose(&reg).unwrap() {
            let again = decompose(&part).unwrap();
            assert_eq!(again.len(), 1);
            assert_eq!(again[0].1, 1);
            assert!(is_isomorphic(&again[0].0, &part).unwrap());
        }
    }

    #[test]
    fn mixed_semisimple_sum_over_a_prime_field() {
        let l = build("field F 5\nvertices 1 2 3\narrow a 1 2\narrow b 2 3\narrow c 3 1\nrelation a*b\nrelation b*c\nrelation c*a\n");
        let s1 = Module::simple(&l, 0).unwrap();
        let s2 = Module::simple(&l, 1).unwrap();
        let sum = Module::direct_sum(&l, &[&s1, &s1, &s2]);
        let mut d = decompose(&sum).unwrap();
        d.sort_by_key(|(_, c)| *c);
        assert_eq!(d.len(), 2);
        assert_eq!(d[0].1, 1);
        assert_eq!(d[1].1, 2);
    }

    #[test]
    fn projective_injective_match_on_a2() {
        // I_2 ≅ P_1 on the two-vertex quiver: the only projective-injective.
        let a = a2();
        let p1 = Module::projective(&a, 0).unwrap();
        let i2 = Module::injective(&a, 1).unwrap();
        let i1 = Module::injective(&a, 0).unwrap();
        assert!(is_isomorphic(&p1, &i2).unwrap());
        assert!(!is_isomorphic(&p1, &i1).unwrap());
    }
}
