//! The bundled identity systems, looked up by name.
//!
//! Each entry transcribes one axiom system as expression trees over canonical
//! slot names. The slot names are fixed per system (callers rename their
//! bundle's products onto them, or the CLI does it for them):
//!
//! | system family | product slots | form | map |
//! |---|---|---|---|
//! | leibniz, invariance, two-cocycle | `circ` | `omega` | — |
//! | split pairs (anti-pre-leibniz, admissible, apl-invariance) | `succ`, `prec` | `omega` | — |
//! | pre-leibniz | `rhd`, `lhd` | — | — |
//! | dialgebras (transformed, novikov, gd) | `vdash`, `dashv` (+ `circ` for gd) | — | — |
//! | perm | `star` | `omega` | — |
//! | averaging / derivation | every product in the bundle | — | `p` |
//! | compatible-leibniz | `circ1`, `circ2` | — | — |
//! | gd-algebra | `bracket`, `ast` | — | — |
//!
//! Split-pair systems never read a `circ` product from the bundle: the
//! sub-adjacent product is derived internally as `succ + prec`, so an
//! inconsistent user-supplied `circ` cannot change a verdict.
//!
//! Every equation here is multilinear, which is what makes the basis-tuple
//! checker in [`crate::identity`] a complete decision procedure for them.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::identity::{Equation, IdentitySystem, Term, EACH_PRODUCT};
use crate::rational::Rational;
use crate::Result;

fn v(symbol: char) -> Term {
    Term::var(symbol)
}

fn p(name: &str, lhs: Term, rhs: Term) -> Term {
    Term::prod(name, lhs, rhs)
}

fn m(name: &str, inner: Term) -> Term {
    Term::map(name, inner)
}

fn add(terms: Vec<Term>) -> Term {
    Term::sum(terms)
}

fn sub(lhs: Term, rhs: Term) -> Term {
    Term::sum(vec![lhs, rhs.negate()])
}

fn scale(n: i64, inner: Term) -> Term {
    Term::scale(Rational::from_integer(n), inner)
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(n)
}

/// `x∘(y∘z) = (x∘y)∘z + y∘(x∘z)` for the named product.
fn leibniz_equation(label: &str, product: &str) -> Equation {
    Equation::vector(
        label,
        p(product, v('x'), p(product, v('y'), v('z'))),
        add(vec![
            p(product, p(product, v('x'), v('y')), v('z')),
            p(product, v('y'), p(product, v('x'), v('z'))),
        ]),
    )
}

fn leibniz() -> IdentitySystem {
    IdentitySystem::new("leibniz", vec![leibniz_equation("leibniz", "circ")])
}

/// `ω(x, y∘z) = ω(x∘z + z∘x, y)`.
fn quadratic_leibniz_invariance() -> IdentitySystem {
    IdentitySystem::new(
        "quadratic-leibniz-invariance",
        vec![Equation::form(
            "quadratic-leibniz-invariance",
            "omega",
            vec![
                (rat(1), v('x'), p("circ", v('y'), v('z'))),
                (rat(-1), p("circ", v('x'), v('z')), v('y')),
                (rat(-1), p("circ", v('z'), v('x')), v('y')),
            ],
        )],
    )
}

/// `ω(z, x∘y) = ω(x, y∘z + z∘y) − ω(y, x∘z)`.
fn two_cocycle() -> IdentitySystem {
    IdentitySystem::new(
        "two-cocycle",
        vec![Equation::form(
            "two-cocycle",
            "omega",
            vec![
                (rat(1), v('z'), p("circ", v('x'), v('y'))),
                (rat(-1), v('x'), p("circ", v('y'), v('z'))),
                (rat(-1), v('x'), p("circ", v('z'), v('y'))),
                (rat(1), v('y'), p("circ", v('x'), v('z'))),
            ],
        )],
    )
}

/// The four defining equations of a split pair `(≻, ≺)` whose sum is a
/// Leibniz product, written over slots `succ`/`prec` with `circ := succ +
/// prec` derived.
///
/// 1. `(x∘y)≺z = x≻(y∘z) − y≻(x∘z)`
/// 2. `(x∘y)≻z = y≻(x≻z) − x≻(y≻z)`
/// 3. `x≺(y∘z) = (y≻x)≺z − y≻(x≺z)`
/// 4. `(x≻y)≺z = −(y≺x)≺z`
fn anti_pre_leibniz_equations(prefix: &str) -> [Equation; 4] {
    [
        Equation::vector(
            &format!("{prefix}-1"),
            p("prec", p("circ", v('x'), v('y')), v('z')),
            sub(
                p("succ", v('x'), p("circ", v('y'), v('z'))),
                p("succ", v('y'), p("circ", v('x'), v('z'))),
            ),
        ),
        Equation::vector(
            &format!("{prefix}-2"),
            p("succ", p("circ", v('x'), v('y')), v('z')),
            sub(
                p("succ", v('y'), p("succ", v('x'), v('z'))),
                p("succ", v('x'), p("succ", v('y'), v('z'))),
            ),
        ),
        Equation::vector(
            &format!("{prefix}-3"),
            p("prec", v('x'), p("circ", v('y'), v('z'))),
            sub(
                p("prec", p("succ", v('y'), v('x')), v('z')),
                p("succ", v('y'), p("prec", v('x'), v('z'))),
            ),
        ),
        Equation::vector(
            &format!("{prefix}-4"),
            p("prec", p("succ", v('x'), v('y')), v('z')),
            p("prec", p("prec", v('y'), v('x')), v('z')).negate(),
        ),
    ]
}

fn anti_pre_leibniz() -> IdentitySystem {
    IdentitySystem::new(
        "anti-pre-leibniz",
        anti_pre_leibniz_equations("anti-pre-leibniz").to_vec(),
    )
    .with_derived_sum("circ", "succ", "prec")
}

/// Equivalent presentation: equations 2–4 above plus
/// `(x∘y)≻z = x≺(y∘z) − y≺(x∘z)`.
fn anti_pre_leibniz_alt() -> IdentitySystem {
    let [_, e2, e3, e4] = anti_pre_leibniz_equations("anti-pre-leibniz-alt");
    let closing = Equation::vector(
        "anti-pre-leibniz-alt-4",
        p("succ", p("circ", v('x'), v('y')), v('z')),
        sub(
            p("prec", v('x'), p("circ", v('y'), v('z'))),
            p("prec", v('y'), p("circ", v('x'), v('z'))),
        ),
    );
    let mut e2 = e2;
    let mut e3 = e3;
    let mut e4 = e4;
    e2.label = "anti-pre-leibniz-alt-1".to_string();
    e3.label = "anti-pre-leibniz-alt-2".to_string();
    e4.label = "anti-pre-leibniz-alt-3".to_string();
    IdentitySystem::new("anti-pre-leibniz-alt", vec![e2, e3, e4, closing])
        .with_derived_sum("circ", "succ", "prec")
}

/// The split pair `(▷, ◁)` whose sum is a Leibniz product and whose
/// multiplication operators act directly (not negated):
///
/// 1. `x▷(y▷z) = (x▷y)▷z + (x◁y)▷z + y▷(x▷z)`
/// 2. `x◁(y▷z) = y▷(x◁z) − (y▷x)◁z − x◁(y◁z)`
/// 3. `(x▷y)◁z = −(y◁x)◁z`
fn pre_leibniz() -> IdentitySystem {
    IdentitySystem::new(
        "pre-leibniz",
        vec![
            Equation::vector(
                "pre-leibniz-1",
                p("rhd", v('x'), p("rhd", v('y'), v('z'))),
                add(vec![
                    p("rhd", p("rhd", v('x'), v('y')), v('z')),
                    p("rhd", p("lhd", v('x'), v('y')), v('z')),
                    p("rhd", v('y'), p("rhd", v('x'), v('z'))),
                ]),
            ),
            Equation::vector(
                "pre-leibniz-2",
                p("lhd", v('x'), p("rhd", v('y'), v('z'))),
                add(vec![
                    p("rhd", v('y'), p("lhd", v('x'), v('z'))),
                    p("lhd", p("rhd", v('y'), v('x')), v('z')).negate(),
                    p("lhd", v('x'), p("lhd", v('y'), v('z'))).negate(),
                ]),
            ),
            Equation::vector(
                "pre-leibniz-3",
                p("lhd", p("rhd", v('x'), v('y')), v('z')),
                p("lhd", p("lhd", v('y'), v('x')), v('z')).negate(),
            ),
        ],
    )
}

/// The first three dialgebra equations on `(⊢, ⊣)`:
///
/// 1. `x⊢(y⊢z) = (x⊢y)⊢z − (y⊣x)⊢z + y⊢(x⊢z)`
/// 2. `(y⊢z)⊣x = y⊢(z⊣x) − z⊣(y⊢x) + (z⊣y)⊣x`
/// 3. `z⊣(x⊢y) = z⊣(x⊣y)`
fn dialgebra_core_equations(prefix: &str) -> [Equation; 3] {
    [
        Equation::vector(
            &format!("{prefix}-1"),
            p("vdash", v('x'), p("vdash", v('y'), v('z'))),
            add(vec![
                p("vdash", p("vdash", v('x'), v('y')), v('z')),
                p("vdash", p("dashv", v('y'), v('x')), v('z')).negate(),
                p("vdash", v('y'), p("vdash", v('x'), v('z'))),
            ]),
        ),
        Equation::vector(
            &format!("{prefix}-2"),
            p("dashv", p("vdash", v('y'), v('z')), v('x')),
            add(vec![
                p("vdash", v('y'), p("dashv", v('z'), v('x'))),
                p("dashv", v('z'), p("vdash", v('y'), v('x'))).negate(),
                p("dashv", p("dashv", v('z'), v('y')), v('x')),
            ]),
        ),
        Equation::vector(
            &format!("{prefix}-3"),
            p("dashv", v('z'), p("vdash", v('x'), v('y'))),
            p("dashv", v('z'), p("dashv", v('x'), v('y'))),
        ),
    ]
}

fn transformed_pre_leibniz() -> IdentitySystem {
    IdentitySystem::new(
        "transformed-pre-leibniz",
        dialgebra_core_equations("transformed-pre-leibniz").to_vec(),
    )
}

/// The full six-equation dialgebra system: the three core equations plus
///
/// 4. `(z⊣y)⊣x = (z⊣x)⊣y`
/// 5. `(y⊣x)⊢z = (y⊢z)⊣x`
/// 6. `(y⊢x)⊢z = (y⊢z)⊣x`
///
/// (the last chained identity splits into two equations).
fn novikov_dialgebra_equations(prefix: &str) -> Vec<Equation> {
    let mut equations = dialgebra_core_equations(prefix).to_vec();
    equations.push(Equation::vector(
        &format!("{prefix}-4"),
        p("dashv", p("dashv", v('z'), v('y')), v('x')),
        p("dashv", p("dashv", v('z'), v('x')), v('y')),
    ));
    equations.push(Equation::vector(
        &format!("{prefix}-5"),
        p("vdash", p("dashv", v('y'), v('x')), v('z')),
        p("dashv", p("vdash", v('y'), v('z')), v('x')),
    ));
    equations.push(Equation::vector(
        &format!("{prefix}-6"),
        p("vdash", p("vdash", v('y'), v('x')), v('z')),
        p("dashv", p("vdash", v('y'), v('z')), v('x')),
    ));
    equations
}

fn novikov_dialgebra() -> IdentitySystem {
    IdentitySystem::new(
        "novikov-dialgebra",
        novikov_dialgebra_equations("novikov-dialgebra"),
    )
}

/// Split pairs `(≻, ≺)` satisfying equations 2–4 of the anti-pre-Leibniz
/// list together with
///
/// 4. `(x≻y)≻z = −(y≺x)≻z`
/// 5. `x≺(y≺z) − y≺(x≺z) = 2(x≺y)≺z − 2(y≺x)≺z`
/// 6. `(x≻y)≻z + y≺(x≻z) = 2·x≻(y∘z)` with `∘ := ≻ + ≺`.
fn admissible_novikov_dialgebra() -> IdentitySystem {
    let [_, e2, e3, e4] = anti_pre_leibniz_equations("admissible-novikov-dialgebra");
    let mut e2 = e2;
    let mut e3 = e3;
    let mut e4 = e4;
    e2.label = "admissible-novikov-dialgebra-1".to_string();
    e3.label = "admissible-novikov-dialgebra-2".to_string();
    e4.label = "admissible-novikov-dialgebra-3".to_string();
    let equations = vec![
        e2,
        e3,
        e4,
        Equation::vector(
            "admissible-novikov-dialgebra-4",
            p("succ", p("succ", v('x'), v('y')), v('z')),
            p("succ", p("prec", v('y'), v('x')), v('z')).negate(),
        ),
        Equation::vector(
            "admissible-novikov-dialgebra-5",
            sub(
                p("prec", v('x'), p("prec", v('y'), v('z'))),
                p("prec", v('y'), p("prec", v('x'), v('z'))),
            ),
            sub(
                scale(2, p("prec", p("prec", v('x'), v('y')), v('z'))),
                scale(2, p("prec", p("prec", v('y'), v('x')), v('z'))),
            ),
        ),
        Equation::vector(
            "admissible-novikov-dialgebra-6",
            add(vec![
                p("succ", p("succ", v('x'), v('y')), v('z')),
                p("prec", v('y'), p("succ", v('x'), v('z'))),
            ]),
            scale(2, p("succ", v('x'), p("circ", v('y'), v('z')))),
        ),
    ];
    IdentitySystem::new("admissible-novikov-dialgebra", equations)
        .with_derived_sum("circ", "succ", "prec")
}

/// `x⋆(y⋆z) = (x⋆y)⋆z = (y⋆x)⋆z`, split into two equations.
fn perm() -> IdentitySystem {
    IdentitySystem::new(
        "perm",
        vec![
            Equation::vector(
                "perm-1",
                p("star", v('x'), p("star", v('y'), v('z'))),
                p("star", p("star", v('x'), v('y')), v('z')),
            ),
            Equation::vector(
                "perm-2",
                p("star", p("star", v('x'), v('y')), v('z')),
                p("star", p("star", v('y'), v('x')), v('z')),
            ),
        ],
    )
}

/// `ω(x⋆y, z) = ω(x, y⋆z − z⋆y)`.
fn quadratic_perm_invariance() -> IdentitySystem {
    IdentitySystem::new(
        "quadratic-perm-invariance",
        vec![Equation::form(
            "quadratic-perm-invariance",
            "omega",
            vec![
                (rat(1), p("star", v('x'), v('y')), v('z')),
                (rat(-1), v('x'), p("star", v('y'), v('z'))),
                (rat(1), v('x'), p("star", v('z'), v('y'))),
            ],
        )],
    )
}

/// `P(x)·P(y) = P(P(x)·y) = P(x·P(y))` for every product `·` in the bundle.
fn averaging() -> IdentitySystem {
    IdentitySystem::new(
        "averaging",
        vec![
            Equation::vector(
                "averaging-1",
                p(EACH_PRODUCT, m("p", v('x')), m("p", v('y'))),
                m("p", p(EACH_PRODUCT, m("p", v('x')), v('y'))),
            ),
            Equation::vector(
                "averaging-2",
                p(EACH_PRODUCT, m("p", v('x')), m("p", v('y'))),
                m("p", p(EACH_PRODUCT, v('x'), m("p", v('y')))),
            ),
        ],
    )
    .per_product()
}

/// `P(x·y) = P(x)·y + x·P(y)` for every product `·` in the bundle.
fn derivation() -> IdentitySystem {
    IdentitySystem::new(
        "derivation",
        vec![Equation::vector(
            "derivation",
            m("p", p(EACH_PRODUCT, v('x'), v('y'))),
            add(vec![
                p(EACH_PRODUCT, m("p", v('x')), v('y')),
                p(EACH_PRODUCT, v('x'), m("p", v('y'))),
            ]),
        )],
    )
    .per_product()
}

/// Two Leibniz products whose sum is again Leibniz: each product satisfies
/// the Leibniz identity, and the mixed terms cancel:
/// `x∘₂(y∘₁z) + x∘₁(y∘₂z) = (x∘₁y)∘₂z + (x∘₂y)∘₁z + y∘₂(x∘₁z) + y∘₁(x∘₂z)`.
fn compatible_leibniz() -> IdentitySystem {
    IdentitySystem::new(
        "compatible-leibniz",
        vec![
            leibniz_equation("compatible-leibniz-1", "circ1"),
            leibniz_equation("compatible-leibniz-2", "circ2"),
            Equation::vector(
                "compatible-leibniz-3",
                add(vec![
                    p("circ2", v('x'), p("circ1", v('y'), v('z'))),
                    p("circ1", v('x'), p("circ2", v('y'), v('z'))),
                ]),
                add(vec![
                    p("circ2", p("circ1", v('x'), v('y')), v('z')),
                    p("circ1", p("circ2", v('x'), v('y')), v('z')),
                    p("circ2", v('y'), p("circ1", v('x'), v('z'))),
                    p("circ1", v('y'), p("circ2", v('x'), v('z'))),
                ]),
            ),
        ],
    )
}

/// Alternating bracket plus the Jacobi identity, both in multilinear form:
/// `[x,y] + [y,x] = 0` and `[[x,y],z] + [[y,z],x] + [[z,x],y] = 0`.
fn lie_algebra_equations(prefix: &str, bracket: &str) -> [Equation; 2] {
    [
        Equation::vector(
            &format!("{prefix}-1"),
            p(bracket, v('x'), v('y')),
            p(bracket, v('y'), v('x')).negate(),
        ),
        Equation::vector(
            &format!("{prefix}-2"),
            add(vec![
                p(bracket, p(bracket, v('x'), v('y')), v('z')),
                p(bracket, p(bracket, v('y'), v('z')), v('x')),
                p(bracket, p(bracket, v('z'), v('x')), v('y')),
            ]),
            scale(0, v('x')),
        ),
    ]
}

fn lie_algebra() -> IdentitySystem {
    IdentitySystem::new(
        "lie-algebra",
        lie_algebra_equations("lie-algebra", "bracket").to_vec(),
    )
}

/// Left-symmetry of the associator plus right-commutativity:
/// `(x∗y)∗z − x∗(y∗z) = (y∗x)∗z − y∗(x∗z)` and `(x∗y)∗z = (x∗z)∗y`.
fn novikov_algebra_equations(prefix: &str, product: &str) -> [Equation; 2] {
    [
        Equation::vector(
            &format!("{prefix}-1"),
            sub(
                p(product, p(product, v('x'), v('y')), v('z')),
                p(product, v('x'), p(product, v('y'), v('z'))),
            ),
            sub(
                p(product, p(product, v('y'), v('x')), v('z')),
                p(product, v('y'), p(product, v('x'), v('z'))),
            ),
        ),
        Equation::vector(
            &format!("{prefix}-2"),
            p(product, p(product, v('x'), v('y')), v('z')),
            p(product, p(product, v('x'), v('z')), v('y')),
        ),
    ]
}

fn novikov_algebra() -> IdentitySystem {
    IdentitySystem::new(
        "novikov-algebra",
        novikov_algebra_equations("novikov-algebra", "ast").to_vec(),
    )
}

/// A Lie bracket and a Novikov product, coupled by
/// `[x∗y,z] + [x,y]∗z = [x∗z,y] + [x,z]∗y + x∗[y,z]`.
fn gd_algebra() -> IdentitySystem {
    let mut equations = lie_algebra_equations("gd-algebra-lie", "bracket").to_vec();
    equations.extend(novikov_algebra_equations("gd-algebra-novikov", "ast"));
    equations.push(Equation::vector(
        "gd-algebra-mixed",
        add(vec![
            p("bracket", p("ast", v('x'), v('y')), v('z')),
            p("ast", p("bracket", v('x'), v('y')), v('z')),
        ]),
        add(vec![
            p("bracket", p("ast", v('x'), v('z')), v('y')),
            p("ast", p("bracket", v('x'), v('z')), v('y')),
            p("ast", v('x'), p("bracket", v('y'), v('z'))),
        ]),
    ));
    IdentitySystem::new("gd-algebra", equations)
}

/// A Leibniz product and a Novikov dialgebra pair, coupled by three mixed
/// equations:
///
/// 1. `x⊢(y∘z) + (x∘z)⊣y = (x⊢y)∘z + (x∘y)⊢z + y∘(x⊢z)`
/// 2. `x∘(y⊢z) + (y⊣x)∘z = (y∘z)⊣x + (x∘y)⊢z + y⊢(x∘z)`
/// 3. `x∘(z⊣y) + (y∘z)⊣x = z⊣(x∘y) + y∘(z⊣x) + (x∘z)⊣y`
fn gd_dialgebra() -> IdentitySystem {
    let mut equations = vec![leibniz_equation("gd-dialgebra-leibniz", "circ")];
    equations.extend(novikov_dialgebra_equations("gd-dialgebra-novikov"));
    equations.push(Equation::vector(
        "gd-dialgebra-mixed-1",
        add(vec![
            p("vdash", v('x'), p("circ", v('y'), v('z'))),
            p("dashv", p("circ", v('x'), v('z')), v('y')),
        ]),
        add(vec![
            p("circ", p("vdash", v('x'), v('y')), v('z')),
            p("vdash", p("circ", v('x'), v('y')), v('z')),
            p("circ", v('y'), p("vdash", v('x'), v('z'))),
        ]),
    ));
    equations.push(Equation::vector(
        "gd-dialgebra-mixed-2",
        add(vec![
            p("circ", v('x'), p("vdash", v('y'), v('z'))),
            p("circ", p("dashv", v('y'), v('x')), v('z')),
        ]),
        add(vec![
            p("dashv", p("circ", v('y'), v('z')), v('x')),
            p("vdash", p("circ", v('x'), v('y')), v('z')),
            p("vdash", v('y'), p("circ", v('x'), v('z'))),
        ]),
    ));
    equations.push(Equation::vector(
        "gd-dialgebra-mixed-3",
        add(vec![
            p("circ", v('x'), p("dashv", v('z'), v('y'))),
            p("dashv", p("circ", v('y'), v('z')), v('x')),
        ]),
        add(vec![
            p("dashv", v('z'), p("circ", v('x'), v('y'))),
            p("circ", v('y'), p("dashv", v('z'), v('x'))),
            p("dashv", p("circ", v('x'), v('z')), v('y')),
        ]),
    ));
    IdentitySystem::new("gd-dialgebra", equations)
}

/// The invariance conditions a form satisfies with respect to a split pair:
/// `ω(x≻y, z) = ω(y, x∘z)` and `ω(x≺y, z) = −ω(x, y∘z + z∘y)` with
/// `∘ := ≻ + ≺`.
fn apl_invariance() -> IdentitySystem {
    IdentitySystem::new(
        "apl-invariance",
        vec![
            Equation::form(
                "apl-invariance-1",
                "omega",
                vec![
                    (rat(1), p("succ", v('x'), v('y')), v('z')),
                    (rat(-1), v('y'), p("circ", v('x'), v('z'))),
                ],
            ),
            Equation::form(
                "apl-invariance-2",
                "omega",
                vec![
                    (rat(1), p("prec", v('x'), v('y')), v('z')),
                    (rat(1), v('x'), p("circ", v('y'), v('z'))),
                    (rat(1), v('x'), p("circ", v('z'), v('y'))),
                ],
            ),
        ],
    )
    .with_derived_sum("circ", "succ", "prec")
}

/// Names of all bundled systems, sorted.
#[must_use]
pub fn registry_names() -> Vec<&'static str> {
    vec![
        "admissible-novikov-dialgebra",
        "anti-pre-leibniz",
        "anti-pre-leibniz-alt",
        "apl-invariance",
        "averaging",
        "compatible-leibniz",
        "derivation",
        "gd-algebra",
        "gd-dialgebra",
        "leibniz",
        "lie-algebra",
        "novikov-algebra",
        "novikov-dialgebra",
        "perm",
        "pre-leibniz",
        "quadratic-leibniz-invariance",
        "quadratic-perm-invariance",
        "transformed-pre-leibniz",
        "two-cocycle",
    ]
}

/// Looks up a bundled identity system by name.
///
/// # Errors
///
/// [`Error::UnknownSystem`] for unknown names.
pub fn registry(name: &str) -> Result<IdentitySystem> {
    match name {
        "leibniz" => Ok(leibniz()),
        "quadratic-leibniz-invariance" => Ok(quadratic_leibniz_invariance()),
        "two-cocycle" => Ok(two_cocycle()),
        "anti-pre-leibniz" => Ok(anti_pre_leibniz()),
        "anti-pre-leibniz-alt" => Ok(anti_pre_leibniz_alt()),
        "pre-leibniz" => Ok(pre_leibniz()),
        "transformed-pre-leibniz" => Ok(transformed_pre_leibniz()),
        "novikov-dialgebra" => Ok(novikov_dialgebra()),
        "admissible-novikov-dialgebra" => Ok(admissible_novikov_dialgebra()),
        "perm" => Ok(perm()),
        "quadratic-perm-invariance" => Ok(quadratic_perm_invariance()),
        "averaging" => Ok(averaging()),
        "derivation" => Ok(derivation()),
        "compatible-leibniz" => Ok(compatible_leibniz()),
        "lie-algebra" => Ok(lie_algebra()),
        "novikov-algebra" => Ok(novikov_algebra()),
        "gd-algebra" => Ok(gd_algebra()),
        "gd-dialgebra" => Ok(gd_dialgebra()),
        "apl-invariance" => Ok(apl_invariance()),
        _ => Err(Error::UnknownSystem(name.to_string())),
    }
}
