//! Built-in example bundles.
//!
//! Each catalog entry ships as a JSON file in the interchange format
//! and goes through the same parser as user input — the catalog is
//! also a regression test for the format. Every entry carries claims
//! (system X holds / fails, with slot bindings where needed) that the
//! test suite re-checks on every run.

use loday_core::identity::check_system;
use loday_core::registry::registry;
use loday_core::{AlgebraBundle, CheckReport};

use crate::bind::{self, Binding};
use crate::error::CliError;

/// One checkable statement about a fixture.
#[derive(Debug, Clone, Copy)]
pub struct Claim {
    /// Registry name of the identity system.
    pub system: &'static str,
    /// Product names bound to the system's product slots, in slot
    /// order; empty when the fixture already uses canonical names.
    pub products: &'static [&'static str],
    /// Fixture map bound to the system's map slot.
    pub map: Option<&'static str>,
    /// Fixture form bound to the system's form slot.
    pub form: Option<&'static str>,
    /// Whether the system is expected to hold.
    pub holds: bool,
}

impl Claim {
    const fn holds(system: &'static str) -> Claim {
        Claim {
            system,
            products: &[],
            map: None,
            form: None,
            holds: true,
        }
    }

    const fn fails(system: &'static str) -> Claim {
        Claim {
            holds: false,
            ..Claim::holds(system)
        }
    }

    const fn with_products(mut self, products: &'static [&'static str]) -> Claim {
        self.products = products;
        self
    }

    const fn with_map(mut self, map: &'static str) -> Claim {
        self.map = Some(map);
        self
    }

    /// Short human-readable identity for report rows and test output.
    #[must_use]
    pub fn label(&self) -> String {
        let mut label = self.system.to_owned();
        if !self.products.is_empty() {
            label.push_str(&format!(" products={}", self.products.join(",")));
        }
        if let Some(map) = self.map {
            label.push_str(&format!(" map={map}"));
        }
        if let Some(form) = self.form {
            label.push_str(&format!(" form={form}"));
        }
        label
    }
}

/// A named example bundle with its advertised properties.
#[derive(Debug, Clone, Copy)]
pub struct Fixture {
    /// Catalog name (`loday catalog emit <name>`).
    pub name: &'static str,
    /// One-line description shown by `loday catalog list`.
    pub note: &'static str,
    /// The JSON source, byte-for-byte as shipped.
    pub source: &'static str,
    /// Statements the test suite re-checks.
    pub claims: &'static [Claim],
}

impl Fixture {
    /// Parses the fixture through the ordinary input path.
    ///
    /// # Panics
    ///
    /// Panics if the shipped JSON is invalid — a packaging bug, caught
    /// by the catalog tests.
    #[must_use]
    pub fn bundle(&self) -> AlgebraBundle {
        crate::json::parse_bundle(self.source).expect("catalog fixtures parse")
    }
}

const ZERO_CLAIMS: &[Claim] = &[
    Claim::holds("leibniz"),
    Claim::holds("lie-algebra"),
    Claim::holds("novikov-algebra"),
    Claim::holds("perm"),
    Claim::holds("anti-pre-leibniz"),
    Claim::holds("anti-pre-leibniz-alt"),
    Claim::holds("pre-leibniz"),
    Claim::holds("transformed-pre-leibniz"),
    Claim::holds("novikov-dialgebra"),
    Claim::holds("admissible-novikov-dialgebra"),
    Claim::holds("compatible-leibniz"),
    Claim::holds("gd-algebra"),
    Claim::holds("gd-dialgebra"),
];

/// All catalog entries, in listing order.
pub const FIXTURES: &[Fixture] = &[
    Fixture {
        name: "leib2",
        note: "smallest non-Lie Leibniz algebra: e0*e0 = e1, nilpotent",
        source: include_str!("../fixtures/leib2.json"),
        claims: &[
            Claim::holds("leibniz"),
            Claim::fails("lie-algebra").with_products(&["circ"]),
        ],
    },
    Fixture {
        name: "omega2-on-leib2",
        note: "leib2 with the standard symplectic form: a cocycle that is not invariant",
        source: include_str!("../fixtures/omega2-on-leib2.json"),
        claims: &[
            Claim::holds("leibniz"),
            Claim::holds("two-cocycle"),
            Claim::fails("quadratic-leibniz-invariance"),
        ],
    },
    Fixture {
        name: "nov1",
        note: "one-dimensional Novikov dialgebra: e|-e = e-|e = e",
        source: include_str!("../fixtures/nov1.json"),
        claims: &[
            Claim::holds("novikov-dialgebra"),
            Claim::holds("transformed-pre-leibniz"),
        ],
    },
    Fixture {
        name: "apl1",
        note: "one-dimensional anti-pre-Leibniz pair e>e = e, e<e = -e; its sum is zero",
        source: include_str!("../fixtures/apl1.json"),
        claims: &[
            Claim::holds("anti-pre-leibniz"),
            Claim::holds("anti-pre-leibniz-alt"),
            Claim::holds("admissible-novikov-dialgebra"),
        ],
    },
    Fixture {
        name: "perm4",
        note: "truncated polynomials K[u]/(u^4) with the weighted derivation u^2 d/du \
               (map p) and the averaging operator of multiplication by u (map q)",
        source: include_str!("../fixtures/perm4.json"),
        claims: &[
            Claim::holds("perm"),
            Claim::holds("novikov-algebra").with_products(&["star"]),
            Claim::holds("derivation").with_map("p"),
            Claim::holds("averaging").with_map("q"),
            Claim::fails("averaging").with_map("p"),
            Claim::fails("derivation").with_map("q"),
        ],
    },
    Fixture {
        name: "zero1",
        note: "every product zero in dimension 1; satisfies all homogeneous systems",
        source: include_str!("../fixtures/zero1.json"),
        claims: ZERO_CLAIMS,
    },
    Fixture {
        name: "zero2",
        note: "every product zero in dimension 2",
        source: include_str!("../fixtures/zero2.json"),
        claims: ZERO_CLAIMS,
    },
    Fixture {
        name: "zero3",
        note: "every product zero in dimension 3",
        source: include_str!("../fixtures/zero3.json"),
        claims: ZERO_CLAIMS,
    },
    Fixture {
        name: "zero4",
        note: "every product zero in dimension 4",
        source: include_str!("../fixtures/zero4.json"),
        claims: ZERO_CLAIMS,
    },
    Fixture {
        name: "gd-nov1",
        note: "coupled Leibniz/dialgebra bundle with zero Leibniz part over the \
               one-dimensional Novikov dialgebra",
        source: include_str!("../fixtures/gd-nov1.json"),
        claims: &[
            Claim::holds("gd-dialgebra"),
            Claim::holds("leibniz"),
            Claim::holds("novikov-dialgebra"),
        ],
    },
    Fixture {
        name: "gd2-deriv",
        note: "two-dimensional coupled Leibniz/dialgebra bundle carrying a nonzero \
               derivation (map p); frozen first hit of the seeded random search (seed 0)",
        source: include_str!("../fixtures/gd2-deriv.json"),
        claims: &[
            Claim::holds("gd-dialgebra"),
            Claim::holds("leibniz"),
            Claim::holds("derivation").with_map("p"),
        ],
    },
];

/// Catalog names in listing order.
#[must_use]
pub fn names() -> Vec<&'static str> {
    FIXTURES.iter().map(|f| f.name).collect()
}

/// Looks up a fixture by name.
///
/// # Errors
///
/// [`CliError::UnknownFixture`] when no entry has that name.
pub fn find(name: &str) -> Result<&'static Fixture, CliError> {
    FIXTURES
        .iter()
        .find(|f| f.name == name)
        .ok_or_else(|| CliError::UnknownFixture(name.to_owned()))
}

/// Checks one claim against a bundle, applying its slot bindings.
///
/// # Errors
///
/// Propagates binding and checking failures; a finished check that
/// merely disagrees with the claim is a non-error `CheckReport`.
pub fn claim_report(bundle: &AlgebraBundle, claim: &Claim) -> Result<CheckReport, CliError> {
    let system = registry(claim.system).map_err(CliError::Core)?;
    let binding = Binding {
        products: if claim.products.is_empty() {
            None
        } else {
            Some(claim.products.to_vec())
        },
        form: claim.form,
        map: claim.map,
    };
    let bound = bind::apply(bundle, &system, &binding)?;
    check_system(&system, &bound).map_err(CliError::Core)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique_and_sorted_fixtures_parse() {
        let names = names();
        let mut deduped = names.clone();
        deduped.sort_unstable();
        deduped.dedup();
        assert_eq!(deduped.len(), names.len(), "duplicate catalog names");
        for fixture in FIXTURES {
            let bundle = fixture.bundle();
            assert!(bundle.dim() >= 1);
        }
    }

    #[test]
    fn sources_are_canonical() {
        for fixture in FIXTURES {
            let emitted = crate::json::emit_bundle(&fixture.bundle());
            assert_eq!(
                emitted, fixture.source,
                "fixture {} is not in canonical form",
                fixture.name
            );
        }
    }

    #[test]
    fn every_claim_checks_out() {
        for fixture in FIXTURES {
            let bundle = fixture.bundle();
            for claim in fixture.claims {
                let report = claim_report(&bundle, claim).unwrap_or_else(|e| {
                    panic!("{}: claim {} errored: {e}", fixture.name, claim.label())
                });
                assert_eq!(
                    report.holds,
                    claim.holds,
                    "{}: claim {} expected holds={}",
                    fixture.name,
                    claim.label(),
                    claim.holds
                );
            }
        }
    }

    #[test]
    fn failing_claims_have_counterexamples() {
        for fixture in FIXTURES {
            let bundle = fixture.bundle();
            for claim in fixture.claims.iter().filter(|c| !c.holds) {
                let report = claim_report(&bundle, claim).unwrap();
                assert!(
                    report.counterexample.is_some(),
                    "{}: failing claim {} lacks a counterexample",
                    fixture.name,
                    claim.label()
                );
            }
        }
    }
}
