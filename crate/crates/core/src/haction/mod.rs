//! Generalized H-actions on structure-constant algebras.

mod structure;

pub use structure::{
    check_kappa, decompose, exponent_candidate, h_radical, h_simple_decompose, is_h_simple, kappa_embedding,
    DecompReport, ExponentOptions, Kappa,
};

use crate::algebra::{Quotient, StructAlgebra};
use crate::error::{check_dim, Error, Result};
use crate::field::Scalar;
use crate::hopfzoo::HopfPresentation;
use crate::linalg::{is_zero_vec, unit, vec_add, vec_scale, Matrix, Subspace};

/// Generator labels read as an operator product: `[a, b]` is `ρ(a)ρ(b)`; empty is the identity.
pub type Word = Vec<String>;

pub fn word_label(w: &[String]) -> String {
    if w.is_empty() {
        "id".to_string()
    } else if w.iter().all(|l| l.chars().count() == 1) {
        w.concat()
    } else {
        w.join("*")
    }
}

/// One summand of `h(ab) = sum coeff * ((p a)(q b) + (r b)(s a))`; either pair may be absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionTerm {
    pub p: Option<Word>,
    pub q: Option<Word>,
    pub r: Option<Word>,
    pub s: Option<Word>,
    pub coeff: Scalar,
}

impl ExpansionTerm {
    pub fn direct(p: Word, q: Word) -> Self {
        ExpansionTerm { p: Some(p), q: Some(q), r: None, s: None, coeff: Scalar::one() }
    }

    pub fn twisted(r: Word, s: Word) -> Self {
        ExpansionTerm { p: None, q: None, r: Some(r), s: Some(s), coeff: Scalar::one() }
    }

    pub fn with_coeff(mut self, c: Scalar) -> Self {
        self.coeff = c;
        self
    }

    pub fn has_twisted_part(&self) -> bool {
        self.r.is_some()
    }

    fn words(&self) -> impl Iterator<Item = &Word> {
        [&self.p, &self.q, &self.r, &self.s].into_iter().flatten()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub label: String,
    pub matrix: Matrix,
    pub expansion: Vec<ExpansionTerm>,
}

/// First basis pair on which an expansion fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomFailure {
    pub generator: String,
    pub a: usize,
    pub b: usize,
}

impl std::fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "generator {} fails on basis pair (e{}, e{})", self.generator, self.a, self.b)
    }
}

/// An algebra with operators `ρ(g)` and their product expansions, plus the
/// effective image `H̃` (the unital operator algebra they generate).
#[derive(Clone, Debug)]
pub struct HAction {
    algebra: StructAlgebra,
    generators: Vec<Generator>,
    htilde: Vec<Matrix>,
    htilde_words: Vec<Word>,
}

impl HAction {
    /// Validates shapes and word references and computes `H̃`. The product
    /// axiom itself is checked by [`HAction::verify_action`].
    pub fn new(algebra: StructAlgebra, generators: Vec<Generator>) -> Result<Self> {
        let n = algebra.dim();
        for (i, g) in generators.iter().enumerate() {
            check_dim("generator matrix rows", n, g.matrix.rows())?;
            check_dim("generator matrix cols", n, g.matrix.cols())?;
            if generators[..i].iter().any(|h| h.label == g.label) {
                return Err(Error::Schema(format!("duplicate generator label {}", g.label)));
            }
            if let Some(x) = g.matrix.as_flat().iter().find(|x| !algebra.field().contains(x)) {
                return Err(Error::Schema(format!("entry {x} of generator {} is not in {}", g.label, algebra.field())));
            }
            if g.expansion.is_empty() {
                return Err(Error::Schema(format!("generator {} has an empty expansion", g.label)));
            }
            for t in &g.expansion {
                if t.p.is_some() != t.q.is_some() || t.r.is_some() != t.s.is_some() {
                    return Err(Error::Schema(format!(
                        "expansion term of {} must give p and q together and r and s together",
                        g.label
                    )));
                }
                if t.p.is_none() && t.r.is_none() {
                    return Err(Error::Schema(format!("expansion term of {} is empty", g.label)));
                }
                for w in t.words() {
                    if let Some(bad) = w.iter().find(|l| !generators.iter().any(|h| &h.label == *l)) {
                        return Err(Error::Schema(format!(
                            "expansion of {} references unknown generator {bad}",
                            g.label
                        )));
                    }
                }
            }
        }
        let mut act = HAction { algebra, generators, htilde: Vec::new(), htilde_words: Vec::new() };
        let (basis, words) = act.generate_htilde();
        act.htilde = basis;
        act.htilde_words = words;
        Ok(act)
    }

    pub fn algebra(&self) -> &StructAlgebra {
        &self.algebra
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator(&self, label: &str) -> Option<&Generator> {
        self.generators.iter().find(|g| g.label == label)
    }

    /// Basis of `H̃`, starting with the identity.
    pub fn htilde(&self) -> &[Matrix] {
        &self.htilde
    }

    /// Words producing each basis element of `H̃`.
    pub fn htilde_words(&self) -> &[Word] {
        &self.htilde_words
    }

    pub fn htilde_labels(&self) -> Vec<String> {
        self.htilde_words.iter().map(|w| word_label(w)).collect()
    }

    pub fn generator_matrices(&self) -> Vec<Matrix> {
        self.generators.iter().map(|g| g.matrix.clone()).collect()
    }

    /// `ρ(word)`
    pub fn word_matrix(&self, w: &[String]) -> Result<Matrix> {
        let n = self.algebra.dim();
        let mut m = Matrix::identity(n);
        for l in w {
            let g = self.generator(l).ok_or_else(|| Error::Schema(format!("unknown generator {l}")))?;
            m = m.compose(&g.matrix);
        }
        Ok(m)
    }

    fn generate_htilde(&self) -> (Vec<Matrix>, Vec<Word>) {
        let seeds: Vec<(String, &Matrix)> = self.generators.iter().map(|g| (g.label.clone(), &g.matrix)).collect();
        let n = self.algebra.dim();
        let mut closure = OperatorClosure::new(n);
        closure.insert(Matrix::identity(n), Vec::new());
        let mut i = 0;
        while i < closure.basis.len() && !closure.is_full() {
            for (label, s) in &seeds {
                let m = s.compose(&closure.basis[i]);
                let mut w = vec![label.clone()];
                w.extend(closure.words[i].iter().cloned());
                closure.insert(m, w);
            }
            i += 1;
        }
        (closure.basis, closure.words)
    }

    /// Checks every generator's expansion on all basis pairs.
    pub fn verify_action(&self) -> Result<Option<AxiomFailure>> {
        let n = self.algebra.dim();
        let mut cache: std::collections::HashMap<Word, Matrix> = std::collections::HashMap::new();
        let mut word = |w: &Word| -> Result<Matrix> {
            if let Some(m) = cache.get(w) {
                return Ok(m.clone());
            }
            let m = self.word_matrix(w)?;
            cache.insert(w.clone(), m.clone());
            Ok(m)
        };
        for g in &self.generators {
            let terms = g
                .expansion
                .iter()
                .map(|t| {
                    let pq = match (&t.p, &t.q) {
                        (Some(p), Some(q)) => Some((word(p)?, word(q)?)),
                        _ => None,
                    };
                    let rs = match (&t.r, &t.s) {
                        (Some(r), Some(s)) => Some((word(r)?, word(s)?)),
                        _ => None,
                    };
                    Ok((pq, rs, t.coeff.clone()))
                })
                .collect::<Result<Vec<_>>>()?;
            for a in 0..n {
                for b in 0..n {
                    let lhs = g.matrix.apply(self.algebra.basis_product(a, b));
                    let mut rhs = vec![Scalar::zero(); n];
                    for (pq, rs, c) in &terms {
                        if let Some((p, q)) = pq {
                            let v = self.algebra.mul(&p.column(a), &q.column(b));
                            rhs = vec_add(&rhs, &vec_scale(c, &v));
                        }
                        if let Some((r, s)) = rs {
                            let v = self.algebra.mul(&r.column(b), &s.column(a));
                            rhs = vec_add(&rhs, &vec_scale(c, &v));
                        }
                    }
                    if lhs != rhs {
                        return Ok(Some(AxiomFailure { generator: g.label.clone(), a, b }));
                    }
                }
            }
        }
        Ok(None)
    }

    /// Operator relations, coproduct shape and (for unital `A`) the counit
    /// condition `h 1 = ε(h) 1`. Returns the name of the first failing check.
    pub fn verify_hopf_module_axioms(&self, hopf: &HopfPresentation) -> Result<Option<String>> {
        for label in &hopf.generators {
            if self.generator(label).is_none() {
                return Err(Error::Schema(format!("action has no generator {label} required by the presentation")));
            }
        }
        for g in &self.generators {
            if !hopf.generators.contains(&g.label) {
                return Err(Error::Schema(format!("generator {} is not part of the presentation", g.label)));
            }
        }
        let n = self.algebra.dim();
        for rel in &hopf.relations {
            let mut sum = Matrix::zeros(n, n);
            for (c, w) in &rel.terms {
                sum = sum.add(&self.word_matrix(w)?.scale(c))?;
            }
            if !sum.is_zero() {
                return Ok(Some(rel.name.clone()));
            }
        }
        for (label, expected) in &hopf.coproducts {
            let g = self.generator(label).expect("checked above");
            if g.expansion.iter().any(ExpansionTerm::has_twisted_part) && hopf.is_hopf {
                return Ok(Some(format!("coproduct of {label}: twisted part must be empty")));
            }
            if !same_terms(&g.expansion, expected) {
                return Ok(Some(format!("coproduct of {label}")));
            }
        }
        let unit = self.algebra.unit().map(<[Scalar]>::to_vec).or_else(|| self.algebra.find_unit());
        if let Some(one) = unit {
            for (label, eps) in &hopf.counit {
                let g = self.generator(label).expect("checked above");
                if g.matrix.apply(&one) != vec_scale(eps, &one) {
                    return Ok(Some(format!("unital condition {label}(1) = ε({label}) 1")));
                }
            }
        }
        Ok(None)
    }

    /// Expansion of `ρ(word)` obtained by composing generator expansions.
    pub fn word_expansion(&self, w: &[String]) -> Result<Vec<ExpansionTerm>> {
        let mut acc = vec![ExpansionTerm::direct(Vec::new(), Vec::new())];
        for l in w.iter().rev() {
            let g = self.generator(l).ok_or_else(|| Error::Schema(format!("unknown generator {l}")))?;
            acc = compose_expansions(&g.expansion, &acc);
        }
        Ok(acc)
    }

    /// Coordinates of an operator against the basis of `H̃`, if it lies in `H̃`.
    pub fn htilde_coords(&self, m: &Matrix) -> Option<Vec<Scalar>> {
        let n2 = self.algebra.dim() * self.algebra.dim();
        let cols: Vec<Vec<Scalar>> = self.htilde.iter().map(|h| h.as_flat().to_vec()).collect();
        Matrix::from_columns(n2, &cols).ok()?.solve(m.as_flat()).ok()?
    }

    /// The same `H̃` presented with its basis elements `h0, h1, ...` as
    /// generators; expansions are composed from the original ones and
    /// rewritten in the new basis.
    pub fn regenerate_from_htilde(&self) -> Result<HAction> {
        let label = |i: usize| format!("h{i}");
        let mut gens = Vec::with_capacity(self.htilde.len());
        for (w, m) in self.htilde_words.iter().zip(&self.htilde) {
            let mut terms: Vec<ExpansionTerm> = Vec::new();
            for t in self.word_expansion(w)? {
                let pairs = [(true, &t.p, &t.q), (false, &t.r, &t.s)];
                for (direct, x, y) in pairs {
                    let (Some(x), Some(y)) = (x, y) else { continue };
                    let cx = self.htilde_coords(&self.word_matrix(x)?).ok_or_else(|| Error::Internal("word outside H̃".into()))?;
                    let cy = self.htilde_coords(&self.word_matrix(y)?).ok_or_else(|| Error::Internal("word outside H̃".into()))?;
                    for (i, a) in cx.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
                        for (j, b) in cy.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                            let (u, v) = (vec![label(i)], vec![label(j)]);
                            let base = if direct { ExpansionTerm::direct(u, v) } else { ExpansionTerm::twisted(u, v) };
                            let c = &(&t.coeff * a) * b;
                            match terms.iter_mut().find(|e| ExpansionTerm { coeff: Scalar::one(), ..(*e).clone() } == base) {
                                Some(e) => e.coeff = &e.coeff + &c,
                                None => terms.push(base.with_coeff(c)),
                            }
                        }
                    }
                }
            }
            terms.retain(|t| !t.coeff.is_zero());
            if terms.is_empty() {
                // the zero expansion is spelled as a vanishing multiple of id x id
                terms.push(ExpansionTerm::direct(vec![label(0)], vec![label(0)]).with_coeff(Scalar::zero()));
            }
            gens.push(Generator { label: label(gens.len()), matrix: m.clone(), expansion: terms });
        }
        HAction::new(self.algebra.clone(), gens)
    }

    /// The same action in the basis `f_j = sum_i p[i][j] e_i` of `A`.
    pub fn change_basis(&self, p: &Matrix) -> Result<HAction> {
        let algebra = self.algebra.change_basis(p)?;
        let inv = p.inverse().expect("checked by change_basis");
        let gens = self
            .generators
            .iter()
            .map(|g| Generator { matrix: inv.compose(&g.matrix).compose(p), ..g.clone() })
            .collect();
        HAction::new(algebra, gens)
    }

    /// Action induced on `A / I` for an ideal `I` stable under every generator.
    pub fn induced_on_quotient(&self, ideal: &Subspace) -> Result<(HAction, Quotient)> {
        for g in &self.generators {
            if !ideal.is_stable_under(&g.matrix)? {
                return Err(Error::Precondition(format!("ideal is not stable under generator {}", g.label)));
            }
        }
        let quot = self.algebra.quotient(ideal)?;
        let gens = self
            .generators
            .iter()
            .map(|g| Generator { matrix: quot.projection.compose(&g.matrix).compose(&quot.section), ..g.clone() })
            .collect();
        let act = HAction::new(quot.algebra.clone(), gens)?;
        if let Some(f) = act.verify_action()? {
            return Err(Error::Internal(format!("induced action on the quotient is invalid: {f}")));
        }
        Ok((act, quot))
    }

    /// Action restricted to a subalgebra stable under every generator, in
    /// the subspace's canonical basis.
    pub fn restrict(&self, sub: &Subspace) -> Result<HAction> {
        let algebra = self.algebra.subalgebra(sub)?;
        let gens = self
            .generators
            .iter()
            .map(|g| Ok(Generator { matrix: sub.restrict(&g.matrix)?, ..g.clone() }))
            .collect::<Result<Vec<_>>>()?;
        HAction::new(algebra, gens)
    }

    /// Span of `ρ(h̃) v` over the basis of `H̃` and of `v`.
    pub fn htilde_orbit(&self, v: &Subspace) -> Result<Subspace> {
        let vs: Vec<Vec<Scalar>> =
            self.htilde.iter().flat_map(|h| v.basis().iter().map(move |b| h.apply(b))).collect();
        Subspace::span(self.algebra.dim(), &vs)
    }

    pub fn is_htilde_stable(&self, v: &Subspace) -> Result<bool> {
        for g in &self.generators {
            if !v.is_stable_under(&g.matrix)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn same_terms(a: &[ExpansionTerm], b: &[ExpansionTerm]) -> bool {
    a.len() == b.len() && a.iter().all(|t| b.contains(t)) && b.iter().all(|t| a.contains(t))
}

fn concat(a: &Word, b: &Word) -> Word {
    a.iter().chain(b).cloned().collect()
}

/// Expansion of `g h` from the expansions of `g` and `h`.
fn compose_expansions(g: &[ExpansionTerm], h: &[ExpansionTerm]) -> Vec<ExpansionTerm> {
    let mut out = Vec::new();
    for th in h {
        // h(ab) = (p_h a)(q_h b) + (r_h b)(s_h a); apply g to each product xy.
        let products: Vec<(bool, &Word, &Word)> = [
            th.p.as_ref().zip(th.q.as_ref()).map(|(x, y)| (true, x, y)),
            th.r.as_ref().zip(th.s.as_ref()).map(|(x, y)| (false, x, y)),
        ]
        .into_iter()
        .flatten()
        .collect();
        for (direct, x, y) in products {
            for tg in g {
                let c = &tg.coeff * &th.coeff;
                // g(xy) = (p_g x)(q_g y) + (r_g y)(s_g x)
                if let (Some(pg), Some(qg)) = (&tg.p, &tg.q) {
                    let (u, v) = (concat(pg, x), concat(qg, y));
                    out.push(if direct { ExpansionTerm::direct(u, v) } else { ExpansionTerm::twisted(u, v) }.with_coeff(c.clone()));
                }
                if let (Some(rg), Some(sg)) = (&tg.r, &tg.s) {
                    let (u, v) = (concat(rg, y), concat(sg, x));
                    out.push(if direct { ExpansionTerm::twisted(u, v) } else { ExpansionTerm::direct(u, v) }.with_coeff(c.clone()));
                }
            }
        }
    }
    out
}

/// Incrementally grown span of operators, with the word that produced each basis element.
pub(crate) struct OperatorClosure {
    n: usize,
    span: Subspace,
    pub basis: Vec<Matrix>,
    pub words: Vec<Word>,
}

impl OperatorClosure {
    pub fn new(n: usize) -> Self {
        OperatorClosure { n, span: Subspace::zero(n * n), basis: Vec::new(), words: Vec::new() }
    }

    pub fn is_full(&self) -> bool {
        self.span.is_full()
    }

    pub fn insert(&mut self, m: Matrix, word: Word) -> bool {
        if is_zero_vec(&self.span.reduce(m.as_flat())) {
            return false;
        }
        let mut vs = self.span.basis().to_vec();
        vs.push(m.as_flat().to_vec());
        self.span = Subspace::span(self.n * self.n, &vs).expect("ambient length");
        self.basis.push(m);
        self.words.push(word);
        true
    }
}

/// Unital operator algebra generated by `seeds`.
pub(crate) fn operator_algebra(n: usize, seeds: &[Matrix]) -> Vec<Matrix> {
    let mut closure = OperatorClosure::new(n);
    closure.insert(Matrix::identity(n), Vec::new());
    let mut i = 0;
    while i < closure.basis.len() && !closure.is_full() {
        for s in seeds {
            let m = s.compose(&closure.basis[i]);
            closure.insert(m, Vec::new());
        }
        i += 1;
    }
    closure.basis
}

pub(crate) fn unit_vectors(n: usize) -> Vec<Vec<Scalar>> {
    (0..n).map(|i| unit(n, i)).collect()
}
