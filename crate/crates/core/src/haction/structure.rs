use crate::algebra::{Quotient, StructAlgebra};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{
    equivariant_projection, is_zero_vec, stable_closure_shrink, vec_add, Matrix, SpanCoordinates, StructureTensor,
    Subspace,
};

use super::{operator_algebra, unit_vectors, HAction};

/// `J^H(A)`: the largest subspace of `J(A)` stable under the generators and
/// under all left and right multiplications.
pub fn h_radical(act: &HAction) -> Result<Subspace> {
    let a = act.algebra();
    let mut ops = act.generator_matrices();
    ops.extend(a.multiplication_operators());
    stable_closure_shrink(&a.jacobson_radical(), &ops)
}

/// Operators generating the enveloping algebra of `A` as an H-bimodule over itself.
fn enveloping_seeds(act: &HAction) -> Vec<Matrix> {
    let mut seeds = act.generator_matrices();
    seeds.extend(act.algebra().multiplication_operators());
    seeds
}

/// Algebra structure on a basis of operators closed under composition.
fn operator_structure(n: usize, basis: &[Matrix], field: crate::field::FieldSpec) -> Result<StructAlgebra> {
    let k = basis.len();
    let flat: Vec<Vec<Scalar>> = basis.iter().map(|m| m.as_flat().to_vec()).collect();
    let coords = SpanCoordinates::new(n * n, &flat)?;
    let mut t = StructureTensor::zero(k, k, k);
    for i in 0..k {
        for j in 0..k {
            let prod = basis[i].compose(&basis[j]);
            let c = coords
                .coordinates(prod.as_flat())
                .ok_or_else(|| Error::Internal("operator span is not closed under composition".into()))?;
            for (l, x) in c.into_iter().enumerate() {
                t.set(i, j, l, x);
            }
        }
    }
    Ok(StructAlgebra::new(field, k, t, None)?.with_detected_unit())
}

/// Whether `A² ≠ 0` and `A` has no proper nonzero H-stable two-sided ideal,
/// decided through the enveloping operator algebra `E`.
pub fn is_h_simple(act: &HAction) -> Result<bool> {
    let a = act.algebra();
    let n = a.dim();
    let full = Subspace::full(n);
    if n == 0 || a.product(&full, &full)?.is_zero() {
        return Ok(false);
    }
    let e_basis = operator_algebra(n, &enveloping_seeds(act));
    // E = End(A) acts irreducibly.
    if e_basis.len() == n * n {
        return Ok(true);
    }
    let e = operator_structure(n, &e_basis, a.field())?;
    let combine = |coords: &[Scalar]| -> Matrix {
        coords.iter().zip(&e_basis).fold(Matrix::zeros(n, n), |acc, (c, m)| acc.add(&m.scale(c)).expect("square"))
    };
    // J(E) A is a stable submodule; it is proper because J(E) is nilpotent.
    let je = e.jacobson_radical();
    for r in je.basis() {
        if !combine(r).is_zero() {
            return Ok(false);
        }
    }
    // E is semisimple; distinct central idempotents give distinct isotypic pieces.
    let central = e.primitive_central_idempotents()?;
    if central.len() != 1 {
        return Ok(false);
    }
    // One isotypic piece: A is irreducible iff its commutant has no nontrivial idempotent.
    let commutant = commutant(n, &enveloping_seeds(act))?;
    let c = operator_structure(n, &commutant, a.field())?;
    let pieces = c.primitive_central_idempotents()?;
    if pieces.len() > 1 {
        return Ok(false);
    }
    // A commutant element with two coprime factors in its minimal polynomial
    // yields an idempotent and so a splitting of A; if every element is
    // scalar modulo nilpotents the commutant is the ground field.
    for v in c.basis() {
        let m = c.minimal_polynomial(&v)?;
        let factors = crate::field::factor(&m, a.field().order());
        if factors.len() > 1 {
            return Ok(false);
        }
        if let Some((f, _)) = factors.iter().find(|(f, _)| f.degree() != Some(1)) {
            return Err(Error::FieldTooSmall { factor: f.to_string(), field: a.field().to_string() });
        }
    }
    Ok(c.dim() == 1)
}

/// Basis of `{ X : X T = T X for all T }`.
fn commutant(n: usize, ops: &[Matrix]) -> Result<Vec<Matrix>> {
    let var = |i: usize, j: usize| i * n + j;
    let mut rows = Vec::new();
    for t in ops {
        for i in 0..n {
            for j in 0..n {
                // (X T - T X)[i][j]
                let mut row = vec![Scalar::zero(); n * n];
                for k in 0..n {
                    let a = t.get(k, j);
                    if !a.is_zero() {
                        row[var(i, k)] = &row[var(i, k)] + a;
                    }
                    let b = t.get(i, k);
                    if !b.is_zero() {
                        row[var(k, j)] = &row[var(k, j)] - b;
                    }
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Ok(crate::haction::operator_algebra(n, &[]));
    }
    Ok(Matrix::from_rows(rows)?.kernel().into_iter().map(|v| Matrix::from_flat(n, n, v)).collect())
}

/// Splits a unital algebra with zero H-radical into H-simple ideals: central
/// idempotents linked by some `ρ(h̃)` are merged.
pub fn h_simple_decompose(act: &HAction) -> Result<Vec<Subspace>> {
    let a = act.algebra();
    let n = a.dim();
    if n == 0 {
        return Ok(Vec::new());
    }
    if !a.is_unital() {
        return Err(Error::NotUnital(
            "H-simple decomposition needs a unital algebra; for Hopf actions the quotient by the H-radical \
             of an algebra with unit adjoined is unital"
                .into(),
        ));
    }
    if !h_radical(act)?.is_zero() {
        return Err(Error::Precondition("H-radical is nonzero; decompose the quotient by it instead".into()));
    }
    let idem = a.primitive_central_idempotents()?;
    let k = idem.len();
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let basis = unit_vectors(n);
    for i in 0..k {
        let corner: Vec<Vec<Scalar>> = basis.iter().map(|b| a.mul(&idem[i], b)).collect();
        for h in act.htilde() {
            let images: Vec<Vec<Scalar>> = corner.iter().map(|x| h.apply(x)).collect();
            for j in 0..k {
                if i != j && images.iter().any(|y| !is_zero_vec(&a.mul(&idem[j], y))) {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
    }
    let mut blocks = Vec::new();
    for root in 0..k {
        if find(&mut parent, root) != root {
            continue;
        }
        let e = (0..k)
            .filter(|&j| find(&mut parent, j) == root)
            .fold(vec![Scalar::zero(); n], |acc, j| vec_add(&acc, &idem[j]));
        let block = Subspace::span(n, &basis.iter().map(|b| a.mul(&e, b)).collect::<Vec<_>>())?;
        let restricted = act.restrict(&block)?;
        if !is_h_simple(&restricted)? {
            return Err(Error::DecompositionFailure(format!(
                "block of dimension {} is not H-simple",
                block.dim()
            )));
        }
        blocks.push(block);
    }
    Ok(blocks)
}

/// Multiplicative section of `A -> A/J^H(A)` over the semisimple part.
#[derive(Clone, Debug)]
pub struct Kappa {
    pub jacobson: Subspace,
    pub h_radical: Subspace,
    pub quotient: Quotient,
    /// Wedderburn-Malcev complement of `J(A)` in `A`.
    pub b0: Subspace,
    /// `(B0, B0)`-stable complement of `J^H(A)` in `J(A)`.
    pub n: Subspace,
    /// `π(B0)` inside `A/J^H(A)`.
    pub b: Subspace,
    /// `A/J^H(A) -> A`
    pub kappa: Matrix,
}

pub fn kappa_embedding(act: &HAction) -> Result<Kappa> {
    let a = act.algebra();
    let dim = a.dim();
    let jac = a.jacobson_radical();
    let jh = h_radical(act)?;
    let quotient = a.quotient(&jh)?;
    let b0 = a.wedderburn_malcev()?;
    // B0-bimodule operators on J in J-coordinates; J^H is a sub-bimodule.
    let ops = b0
        .basis()
        .iter()
        .flat_map(|b| [a.left_mult(b), a.right_mult(b)])
        .map(|m| jac.restrict(&m))
        .collect::<Result<Vec<_>>>()?;
    let jh_coords: Vec<Vec<Scalar>> = jh
        .basis()
        .iter()
        .map(|v| jac.coordinates(v).ok_or_else(|| Error::Internal("H-radical is not inside J(A)".into())))
        .collect::<Result<_>>()?;
    let s = Subspace::span(jac.dim(), &jh_coords)?;
    let p = equivariant_projection(jac.dim(), &ops, &s).map_err(|e| match e {
        Error::NotCompletelyReducible => {
            Error::Internal("J(A) has no B0-bimodule complement to the H-radical".into())
        }
        other => other,
    })?;
    let kernel: Vec<Vec<Scalar>> = p.kernel().iter().map(|c| jac.combine(c)).collect();
    let n = Subspace::span(dim, &kernel)?;
    let mut w = b0.basis().to_vec();
    w.extend(n.basis().iter().cloned());
    let wmat = Matrix::from_columns(dim, &w)?;
    let pw = quotient.projection.compose(&wmat);
    let inv = pw.inverse().ok_or_else(|| Error::Internal("B0 + N does not complement the H-radical".into()))?;
    let kappa = wmat.compose(&inv);
    let b = b0.image(&quotient.projection)?;
    let k = Kappa { jacobson: jac, h_radical: jh, quotient, b0, n, b, kappa };
    if let Some(msg) = check_kappa(a, &k) {
        return Err(Error::Internal(msg));
    }
    Ok(k)
}

/// Verifies `πκ = id`, `κ(ab) = κ(a)κ(b)` and `κ(ba) = κ(b)κ(a)` for basis
/// elements `a` of the quotient and `b` of `B`. Returns a description of the first failure.
pub fn check_kappa(a: &StructAlgebra, k: &Kappa) -> Option<String> {
    let q = k.quotient.algebra.dim();
    if !k.quotient.projection.compose(&k.kappa).is_identity() {
        return Some("π κ is not the identity".into());
    }
    let qa = &k.quotient.algebra;
    for i in 0..q {
        let x = qa.basis_vector(i);
        let kx = k.kappa.apply(&x);
        for b in k.b.basis() {
            let kb = k.kappa.apply(b);
            if k.kappa.apply(&qa.mul(&x, b)) != a.mul(&kx, &kb) {
                return Some(format!("κ(a b) ≠ κ(a) κ(b) for quotient basis element {i}"));
            }
            if k.kappa.apply(&qa.mul(b, &x)) != a.mul(&kb, &kx) {
                return Some(format!("κ(b a) ≠ κ(b) κ(a) for quotient basis element {i}"));
            }
        }
    }
    None
}

#[derive(Clone, Debug, Default)]
pub struct ExponentOptions {
    /// Allow a block index to occur more than once in a chain.
    pub allow_repeats: bool,
    /// Longest chain considered when repeats are allowed.
    pub max_len: Option<usize>,
}

/// `d` = the largest total dimension of blocks `B_{i_1}, ..., B_{i_r}` whose
/// chain `(H̃κ(B_{i_1})) A⁺ (H̃κ(B_{i_2})) ... A⁺ (H̃κ(B_{i_r}))` is nonzero,
/// with the lexicographically least maximizing index sequence. Blocks are
/// subspaces of the quotient; repeated indices contribute their dimension once.
pub fn exponent_candidate(
    act: &HAction,
    kappa: &Matrix,
    blocks: &[Subspace],
    opts: &ExponentOptions,
) -> Result<(usize, Vec<usize>)> {
    let a = act.algebra();
    let n = a.dim();
    let orbits = blocks
        .iter()
        .map(|b| {
            let img = b.image(kappa)?;
            act.htilde_orbit(&img)
        })
        .collect::<Result<Vec<_>>>()?;
    let full = Subspace::full(n);
    let max_len = if opts.allow_repeats { opts.max_len.unwrap_or(blocks.len() + 1) } else { blocks.len() };
    let mut best = (0usize, Vec::new());
    let mut seq = Vec::new();
    for (i, o) in orbits.iter().enumerate() {
        seq.push(i);
        search(a, &full, &orbits, blocks, o.clone(), &mut seq, max_len, opts.allow_repeats, &mut best)?;
        seq.pop();
    }
    Ok(best)
}

#[allow(clippy::too_many_arguments)]
fn search(
    a: &StructAlgebra,
    full: &Subspace,
    orbits: &[Subspace],
    blocks: &[Subspace],
    chain: Subspace,
    seq: &mut Vec<usize>,
    max_len: usize,
    repeats: bool,
    best: &mut (usize, Vec<usize>),
) -> Result<()> {
    if chain.is_zero() {
        return Ok(());
    }
    let mut distinct: Vec<usize> = seq.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let total: usize = distinct.iter().map(|&i| blocks[i].dim()).sum();
    if total > best.0 {
        *best = (total, seq.clone());
    }
    if seq.len() == max_len {
        return Ok(());
    }
    // S A⁺ = S + S A
    let extended = chain.sum(&a.product(&chain, full)?)?;
    for (i, o) in orbits.iter().enumerate() {
        if !repeats && seq.contains(&i) {
            continue;
        }
        let next = a.product(&extended, o)?;
        seq.push(i);
        search(a, full, orbits, blocks, next, seq, max_len, repeats, best)?;
        seq.pop();
    }
    Ok(())
}

/// Structural summary: radicals, quotient, blocks, `κ` and the exponent candidate.
#[derive(Clone, Debug)]
pub struct DecompReport {
    pub jacobson: Subspace,
    pub h_radical: Subspace,
    pub nilpotent: bool,
    pub quotient_dim: usize,
    /// H-simple blocks as subspaces of `A/J^H(A)`.
    pub blocks: Vec<Subspace>,
    pub kappa: Kappa,
    pub d: usize,
    pub witness: Vec<usize>,
}

pub fn decompose(act: &HAction, opts: &ExponentOptions) -> Result<DecompReport> {
    if let Some(f) = act.verify_action()? {
        return Err(Error::AxiomViolation { generator: f.generator, a: f.a, b: f.b });
    }
    let a = act.algebra();
    let kappa = kappa_embedding(act)?;
    let nilpotent = a.is_nilpotent(&Subspace::full(a.dim()))?;
    let (quot_act, _) = act.induced_on_quotient(&kappa.h_radical)?;
    let (blocks, d, witness) = if nilpotent {
        (Vec::new(), 0, Vec::new())
    } else {
        let blocks = h_simple_decompose(&quot_act)?;
        let (d, w) = exponent_candidate(act, &kappa.kappa, &blocks, opts)?;
        (blocks, d, w)
    };
    Ok(DecompReport {
        jacobson: kappa.jacobson.clone(),
        h_radical: kappa.h_radical.clone(),
        nilpotent,
        quotient_dim: kappa.quotient.algebra.dim(),
        blocks,
        kappa,
        d,
        witness,
    })
}
