//! Bundled example documents. The JSON files under `catalog/` are generated
//! from the constructors below (set `HPI_REGENERATE_CATALOG=1` and run the
//! catalog tests to rewrite them) and embedded at compile time.

use crate::algebra::examples::{diagonal, matrix_algebra, triangular, truncated};
use crate::doc::{Document, HopfSpec};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::Matrix;

use super::{grading_dual_action, group_action, taft_action, trivial_action, Grading, MapKind};

const EMBEDDED: &[(&str, &str)] = &[
    ("sweedler-dual-numbers", include_str!("../../catalog/sweedler-dual-numbers.json")),
    ("ut2-trivial", include_str!("../../catalog/ut2-trivial.json")),
    ("ut3-trivial", include_str!("../../catalog/ut3-trivial.json")),
    ("m2-trivial", include_str!("../../catalog/m2-trivial.json")),
    ("m2-z2", include_str!("../../catalog/m2-z2.json")),
    ("ut2-z2", include_str!("../../catalog/ut2-z2.json")),
    ("f2-swap", include_str!("../../catalog/f2-swap.json")),
    ("f2-trivial", include_str!("../../catalog/f2-trivial.json")),
];

pub fn names() -> Vec<&'static str> {
    EMBEDDED.iter().map(|(n, _)| *n).collect()
}

/// Raw JSON text of a bundled document.
pub fn source(name: &str) -> Result<&'static str> {
    EMBEDDED
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, s)| *s)
        .ok_or_else(|| Error::Schema(format!("no catalog entry named {name:?} (available: {})", names().join(", "))))
}

pub fn load(name: &str) -> Result<Document> {
    Document::from_json(source(name)?)
}

/// Rebuilds an entry from its constructor, running all axiom checks.
pub fn build(name: &str) -> Result<Document> {
    let doc = |note: &str, action, hopf, grading| Document { name: name.to_string(), note: note.to_string(), action, hopf, grading };
    Ok(match name {
        "sweedler-dual-numbers" => {
            let a = truncated(2);
            let pc = Matrix::from_ints(&[&[1, 0], &[0, -1]]);
            let pv = Matrix::from_ints(&[&[0, 1], &[0, 0]]);
            let zeta = Scalar::from(-1);
            let act = taft_action(&a, pc, pv, 2, &zeta)?;
            doc(
                "Sweedler algebra H4(-1) on F[x]/(x^2), basis 1, x: c is the parity automorphism x -> -x, v is the skew derivation with v(x) = 1.",
                act,
                Some(HopfSpec::Taft { m: 2, zeta }),
                None,
            )
        }
        "ut2-trivial" => doc(
            "Upper triangular 2x2 matrices, basis e11, e12, e22, with the ground field acting by scalars.",
            trivial_action(&triangular(2, false)),
            Some(HopfSpec::Trivial),
            None,
        ),
        "ut3-trivial" => doc(
            "Upper triangular 3x3 matrices, basis e11, e12, e13, e22, e23, e33, with the ground field acting by scalars.",
            trivial_action(&triangular(3, false)),
            Some(HopfSpec::Trivial),
            None,
        ),
        "m2-trivial" => doc(
            "Full 2x2 matrix algebra, basis e11, e12, e21, e22, with the ground field acting by scalars.",
            trivial_action(&matrix_algebra(2)),
            Some(HopfSpec::Trivial),
            None,
        ),
        "m2-z2" => {
            let a = matrix_algebra(2);
            let g = Grading::z2(vec![0, 1, 1, 0]);
            doc(
                "Full 2x2 matrix algebra with the Z2-grading diagonal = 0, antidiagonal = 1; the dual group algebra acts by the homogeneous projections h0, h1.",
                grading_dual_action(&a, &g)?,
                Some(HopfSpec::GradingDual),
                Some(g),
            )
        }
        "ut2-z2" => {
            let a = triangular(2, false);
            let g = Grading::z2(vec![0, 1, 0]);
            doc(
                "Upper triangular 2x2 matrices with e12 in degree 1 and the diagonal in degree 0; the dual of Z2 acts by homogeneous projections.",
                grading_dual_action(&a, &g)?,
                Some(HopfSpec::GradingDual),
                Some(g),
            )
        }
        "f2-swap" => {
            let a = diagonal(2);
            let swap = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
            doc(
                "F + F with orthogonal idempotents e1, e2; the group Z2 acts by the automorphism exchanging them.",
                group_action(&a, &[("s".to_string(), swap, MapKind::Auto)])?,
                Some(HopfSpec::GroupAlgebra),
                None,
            )
        }
        "f2-trivial" => doc(
            "F + F with orthogonal idempotents e1, e2 and the ground field acting by scalars.",
            trivial_action(&diagonal(2)),
            Some(HopfSpec::Trivial),
            None,
        ),
        other => return Err(Error::Schema(format!("no catalog constructor named {other:?}"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn catalog_dir() -> std::path::PathBuf {
        std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("catalog")
    }

    #[test]
    fn embedded_files_match_constructors() {
        let regenerate = std::env::var_os("HPI_REGENERATE_CATALOG").is_some();
        for name in names() {
            let text = build(name).unwrap().to_json();
            if regenerate {
                std::fs::write(catalog_dir().join(format!("{name}.json")), &text).unwrap();
            } else {
                assert_eq!(source(name).unwrap(), text, "catalog/{name}.json is stale");
            }
        }
    }

    #[test]
    fn round_trip_is_bit_exact() {
        for name in names() {
            let text = source(name).unwrap();
            let doc = load(name).unwrap();
            assert_eq!(doc.name, name);
            let again = doc.to_json();
            assert_eq!(again, text);
            let reparsed = Document::from_json(&again).unwrap();
            assert_eq!(reparsed.to_raw(), doc.to_raw());
        }
    }

    #[test]
    fn every_entry_passes_its_checks() {
        for name in names() {
            let doc = load(name).unwrap();
            assert_eq!(doc.action.verify_action().unwrap(), None, "{name}");
            let pres = doc.presentation().unwrap().unwrap();
            assert_eq!(doc.action.verify_hopf_module_axioms(&pres).unwrap(), None, "{name}");
        }
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(load("nope"), Err(Error::Schema(_))));
    }
}
