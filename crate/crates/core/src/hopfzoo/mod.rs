//! Constructors for the standard example actions: Taft algebras, group and
//! (anti)automorphism actions, grading duals and the trivial action.

pub mod catalog;
mod taft;

pub use taft::{taft, TaftAlgebra};

use crate::algebra::StructAlgebra;
use crate::error::{Error, Result};
use crate::field::{is_primitive_root, Scalar};
use crate::haction::{ExpansionTerm, Generator, HAction, Word};
use crate::linalg::{is_zero_vec, Matrix};

/// `sum coeff * ρ(word) = 0`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub name: String,
    pub terms: Vec<(Scalar, Word)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HopfKind {
    Taft { m: u32, zeta: Scalar },
    GroupAlgebra,
    GradingDual { support: Vec<String> },
    Trivial,
}

/// Generators, operator relations, expected expansions and counit of the
/// acting algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfPresentation {
    pub kind: HopfKind,
    pub generators: Vec<String>,
    pub relations: Vec<Relation>,
    pub coproducts: Vec<(String, Vec<ExpansionTerm>)>,
    pub counit: Vec<(String, Scalar)>,
    /// Whether expansions must be ordinary coproducts (no twisted part).
    pub is_hopf: bool,
}

fn word(labels: &[&str]) -> Word {
    labels.iter().map(|s| s.to_string()).collect()
}

fn power_word(label: &str, k: u32) -> Word {
    (0..k).map(|_| label.to_string()).collect()
}

/// Grading of a basis by a finite set with a partial product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    pub support: Vec<String>,
    /// Component index of each basis vector.
    pub components: Vec<usize>,
    /// `product[g][w]` = index of `gw`, or `None` when undefined.
    pub product: Vec<Vec<Option<usize>>>,
}

impl Grading {
    /// `{0, 1}` under addition mod 2.
    pub fn z2(components: Vec<usize>) -> Grading {
        Grading {
            support: vec!["0".into(), "1".into()],
            components,
            product: vec![vec![Some(0), Some(1)], vec![Some(1), Some(0)]],
        }
    }

    /// Every basis vector in the single component `t` with `t t = t`.
    pub fn trivial(dim: usize) -> Grading {
        Grading { support: vec!["0".into()], components: vec![0; dim], product: vec![vec![Some(0)]] }
    }

    pub fn labels(&self) -> Vec<String> {
        self.support.iter().map(|t| format!("h{t}")).collect()
    }

    /// Checks that `e_a e_b` lies in component `gw` (or vanishes if `gw` is undefined).
    pub fn validate(&self, a: &StructAlgebra) -> Result<()> {
        let k = self.support.len();
        if self.components.len() != a.dim() {
            return Err(Error::Schema(format!(
                "grading assigns {} components for an algebra of dimension {}",
                self.components.len(),
                a.dim()
            )));
        }
        if self.product.len() != k || self.product.iter().any(|r| r.len() != k) {
            return Err(Error::Schema("grading product table must be square over the support".into()));
        }
        if self.components.iter().any(|&c| c >= k) || self.product.iter().flatten().flatten().any(|&c| c >= k) {
            return Err(Error::Schema("grading refers to a component outside the support".into()));
        }
        for x in 0..a.dim() {
            for y in 0..a.dim() {
                let prod = a.basis_product(x, y);
                if is_zero_vec(prod) {
                    continue;
                }
                let (g, w) = (self.components[x], self.components[y]);
                match self.product[g][w] {
                    None => {
                        return Err(Error::GradingViolation {
                            a: x,
                            b: y,
                            reason: format!("product is nonzero but {}*{} is undefined", self.support[g], self.support[w]),
                        })
                    }
                    Some(t) => {
                        if let Some(bad) = prod.iter().enumerate().find(|(i, c)| !c.is_zero() && self.components[*i] != t) {
                            return Err(Error::GradingViolation {
                                a: x,
                                b: y,
                                reason: format!(
                                    "product has a component along e{} outside component {}",
                                    bad.0, self.support[t]
                                ),
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn identity_element(&self) -> Option<usize> {
        let k = self.support.len();
        (0..k).find(|&e| (0..k).all(|t| self.product[e][t] == Some(t) && self.product[t][e] == Some(t)))
    }

    fn expansion(&self, t: usize) -> Vec<ExpansionTerm> {
        let labels = self.labels();
        let k = self.support.len();
        let mut terms = Vec::new();
        for g in 0..k {
            for w in 0..k {
                if self.product[g][w] == Some(t) {
                    terms.push(ExpansionTerm::direct(vec![labels[g].clone()], vec![labels[w].clone()]));
                }
            }
        }
        if terms.is_empty() {
            terms.push(ExpansionTerm::direct(vec![labels[t].clone()], vec![labels[t].clone()]).with_coeff(Scalar::zero()));
        }
        terms
    }

    pub fn presentation(&self) -> HopfPresentation {
        let labels = self.labels();
        let k = self.support.len();
        let mut relations = Vec::new();
        for g in 0..k {
            for w in 0..k {
                let mut terms = vec![(Scalar::one(), vec![labels[g].clone(), labels[w].clone()])];
                if g == w {
                    terms.push((Scalar::from(-1), vec![labels[g].clone()]));
                }
                relations.push(Relation { name: format!("{}{} = {}", labels[g], labels[w], if g == w { labels[g].as_str() } else { "0" }), terms });
            }
        }
        let mut sum: Vec<(Scalar, Word)> = labels.iter().map(|l| (Scalar::one(), vec![l.clone()])).collect();
        sum.push((Scalar::from(-1), Vec::new()));
        relations.push(Relation { name: "sum of projections = 1".into(), terms: sum });
        let counit = match self.identity_element() {
            Some(e) => labels
                .iter()
                .enumerate()
                .map(|(t, l)| (l.clone(), if t == e { Scalar::one() } else { Scalar::zero() }))
                .collect(),
            None => Vec::new(),
        };
        HopfPresentation {
            kind: HopfKind::GradingDual { support: self.support.clone() },
            generators: labels.clone(),
            relations,
            coproducts: (0..k).map(|t| (labels[t].clone(), self.expansion(t))).collect(),
            counit,
            is_hopf: true,
        }
    }
}

fn ensure_valid(act: &HAction, hopf: Option<&HopfPresentation>) -> Result<()> {
    if let Some(h) = hopf {
        if let Some(rel) = act.verify_hopf_module_axioms(h)? {
            return Err(Error::RelationViolation { relation: rel });
        }
    }
    if let Some(f) = act.verify_action()? {
        return Err(Error::AxiomViolation { generator: f.generator, a: f.a, b: f.b });
    }
    Ok(())
}

/// Taft algebra `H_{m²}(ζ)` acting through `c -> pc`, `v -> pv`.
pub fn taft_action(a: &StructAlgebra, pc: Matrix, pv: Matrix, m: u32, zeta: &Scalar) -> Result<HAction> {
    let pres = taft_presentation(m, zeta)?;
    let gens = vec![
        Generator { label: "c".into(), matrix: pc, expansion: taft_coproduct("c") },
        Generator { label: "v".into(), matrix: pv, expansion: taft_coproduct("v") },
    ];
    let act = HAction::new(a.clone(), gens)?;
    ensure_valid(&act, Some(&pres))?;
    Ok(act)
}

fn taft_coproduct(label: &str) -> Vec<ExpansionTerm> {
    match label {
        "c" => vec![ExpansionTerm::direct(word(&["c"]), word(&["c"]))],
        _ => vec![ExpansionTerm::direct(word(&["c"]), word(&["v"])), ExpansionTerm::direct(word(&["v"]), word(&[]))],
    }
}

pub fn taft_presentation(m: u32, zeta: &Scalar) -> Result<HopfPresentation> {
    if m < 2 || !is_primitive_root(zeta, m) {
        return Err(Error::Precondition(format!("{zeta} is not a primitive {m}-th root of unity")));
    }
    let relations = vec![
        Relation {
            name: format!("c^{m} = 1"),
            terms: vec![(Scalar::one(), power_word("c", m)), (Scalar::from(-1), Vec::new())],
        },
        Relation { name: format!("v^{m} = 0"), terms: vec![(Scalar::one(), power_word("v", m))] },
        Relation {
            name: "vc = zeta cv".into(),
            terms: vec![(Scalar::one(), word(&["v", "c"])), (-zeta, word(&["c", "v"]))],
        },
    ];
    Ok(HopfPresentation {
        kind: HopfKind::Taft { m, zeta: zeta.clone() },
        generators: vec!["c".into(), "v".into()],
        relations,
        coproducts: vec![("c".into(), taft_coproduct("c")), ("v".into(), taft_coproduct("v"))],
        counit: vec![("c".into(), Scalar::one()), ("v".into(), Scalar::zero())],
        is_hopf: true,
    })
}

/// Action of the dual of a finite semigroup algebra encoding a grading:
/// `h_t` projects onto component `t` and `h_t(ab) = sum_{gw=t} h_g(a) h_w(b)`.
pub fn grading_dual_action(a: &StructAlgebra, grading: &Grading) -> Result<HAction> {
    grading.validate(a)?;
    let labels = grading.labels();
    let n = a.dim();
    let gens = (0..grading.support.len())
        .map(|t| {
            let mut m = Matrix::zeros(n, n);
            for (i, &c) in grading.components.iter().enumerate() {
                if c == t {
                    m.set(i, i, Scalar::one());
                }
            }
            Generator { label: labels[t].clone(), matrix: m, expansion: grading.expansion(t) }
        })
        .collect();
    let act = HAction::new(a.clone(), gens)?;
    ensure_valid(&act, Some(&grading.presentation()))?;
    Ok(act)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapKind {
    Auto,
    Anti,
}

impl MapKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MapKind::Auto => "multiplicative",
            MapKind::Anti => "anti-multiplicative",
        }
    }
}

/// Smallest `k` in `1..=cap` with `m^k = 1`.
fn matrix_order(m: &Matrix, cap: u32) -> Option<u32> {
    let mut p = m.clone();
    for k in 1..=cap {
        if p.is_identity() {
            return Some(k);
        }
        p = p.compose(m);
    }
    None
}

/// Semigroup action by endomorphisms (`Auto`) and anti-endomorphisms (`Anti`).
pub fn group_action(a: &StructAlgebra, maps: &[(String, Matrix, MapKind)]) -> Result<HAction> {
    for (index, (_, m, kind)) in maps.iter().enumerate() {
        for x in 0..a.dim() {
            for y in 0..a.dim() {
                let lhs = m.apply(a.basis_product(x, y));
                let (mx, my) = (m.column(x), m.column(y));
                let rhs = match kind {
                    MapKind::Auto => a.mul(&mx, &my),
                    MapKind::Anti => a.mul(&my, &mx),
                };
                if lhs != rhs {
                    return Err(Error::NotMultiplicative { index, kind: kind.as_str(), a: x, b: y });
                }
            }
        }
    }
    let gens = maps
        .iter()
        .map(|(label, m, kind)| {
            let w = vec![label.clone()];
            let term = match kind {
                MapKind::Auto => ExpansionTerm::direct(w.clone(), w),
                MapKind::Anti => ExpansionTerm::twisted(w.clone(), w),
            };
            Generator { label: label.clone(), matrix: m.clone(), expansion: vec![term] }
        })
        .collect();
    let act = HAction::new(a.clone(), gens)?;
    ensure_valid(&act, Some(&group_presentation(&act)))?;
    Ok(act)
}

/// Relations `g^k = 1` for generators of finite order, with group-like expansions.
pub fn group_presentation(act: &HAction) -> HopfPresentation {
    let n = act.algebra().dim();
    let cap = (2 * n * n + 2) as u32;
    let relations = act
        .generators()
        .iter()
        .filter_map(|g| {
            matrix_order(&g.matrix, cap).map(|k| Relation {
                name: format!("{}^{k} = 1", g.label),
                terms: vec![(Scalar::one(), power_word(&g.label, k)), (Scalar::from(-1), Vec::new())],
            })
        })
        .collect();
    HopfPresentation {
        kind: HopfKind::GroupAlgebra,
        generators: act.generators().iter().map(|g| g.label.clone()).collect(),
        relations,
        coproducts: act.generators().iter().map(|g| (g.label.clone(), g.expansion.clone())).collect(),
        counit: act.generators().iter().map(|g| (g.label.clone(), Scalar::one())).collect(),
        is_hopf: act.generators().iter().all(|g| !g.expansion.iter().any(ExpansionTerm::has_twisted_part)),
    }
}

/// The ground field acting by scalars: one generator `id` acting as the identity.
pub fn trivial_action(a: &StructAlgebra) -> HAction {
    let gens = vec![Generator {
        label: "id".into(),
        matrix: Matrix::identity(a.dim()),
        expansion: vec![ExpansionTerm::direct(Vec::new(), Vec::new())],
    }];
    HAction::new(a.clone(), gens).expect("identity generator is well formed")
}

pub fn trivial_presentation() -> HopfPresentation {
    HopfPresentation {
        kind: HopfKind::Trivial,
        generators: vec!["id".into()],
        relations: vec![Relation {
            name: "id = 1".into(),
            terms: vec![(Scalar::one(), word(&["id"])), (Scalar::from(-1), Vec::new())],
        }],
        coproducts: vec![("id".into(), vec![ExpansionTerm::direct(Vec::new(), Vec::new())])],
        counit: vec![("id".into(), Scalar::one())],
        is_hopf: true,
    }
}

#[cfg(test)]
mod tests;
