//! The built-in corpus: small rings with hand-checked modules and expectations.

use super::input::{build_module, ModuleSpec};
use crate::algebra::{build_algebra, AlgebraSpec, Ring};
use crate::conditions::ObstructionIndex;
use crate::error::Result;
use crate::guards::Guards;
use crate::module::RightModule;
use serde::Serialize;

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "why", rename_all = "lowercase")]
pub enum Source {
    /// A published implication or example, stated in words.
    Theory(&'static str),
    /// Immediate from the shape of the module.
    Trivial(&'static str),
    /// Checked by hand against a named oracle when the entry was written.
    Derived(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    C4,
    C4Star,
    Swcs,
    Strong,
    SummandSquareFree,
    Semisimple,
    Index(ObstructionIndex),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Expectation {
    pub property: Property,
    /// Ignored for `Index`, which carries its own value.
    pub value: bool,
    pub source: Source,
}

#[derive(Debug, Clone)]
pub struct CorpusRing {
    pub name: &'static str,
    pub spec: AlgebraSpec,
}

impl CorpusRing {
    pub fn build(&self) -> Result<Ring> {
        build_algebra(&self.spec)
    }
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub ring: &'static str,
    pub module: ModuleSpec,
    pub expected: Vec<Expectation>,
}

impl CorpusEntry {
    pub fn build(&self, ring: &Ring, guards: &Guards) -> Result<RightModule> {
        build_module(ring, &self.module, guards)
    }
}

fn field(p: u64) -> AlgebraSpec {
    AlgebraSpec::Field { p }
}

fn dual_spec() -> AlgebraSpec {
    AlgebraSpec::PolyQuotient { p: 2, coeffs: vec![0, 0, 1] }
}

pub fn corpus_rings() -> Vec<CorpusRing> {
    vec![
        CorpusRing { name: "F2", spec: field(2) },
        CorpusRing { name: "F3", spec: field(3) },
        CorpusRing { name: "F2[x]/(x^2)", spec: dual_spec() },
        CorpusRing { name: "F2[x]/(x^3)", spec: AlgebraSpec::PolyQuotient { p: 2, coeffs: vec![0, 0, 0, 1] } },
        CorpusRing { name: "T2(F2)", spec: AlgebraSpec::UpperTriangular { p: 2, n: 2 } },
        CorpusRing { name: "M2(F2)", spec: AlgebraSpec::Matrix { base: Box::new(field(2)), n: 2 } },
        CorpusRing { name: "F2xF2", spec: AlgebraSpec::Product(Box::new(field(2)), Box::new(field(2))) },
        CorpusRing { name: "M2(F2[x]/(x^2))", spec: AlgebraSpec::Matrix { base: Box::new(dual_spec()), n: 2 } },
    ]
}

/// 𝔽₂[x, y]/(x, y)²: local, so summand-square-free, with a two-dimensional socle.
pub fn square_zero_plane() -> CorpusRing {
    let e = |i: usize| {
        let mut v = vec![0u64; 3];
        v[i] = 1;
        v
    };
    CorpusRing {
        name: "F2[x,y]/(x,y)^2",
        spec: AlgebraSpec::Raw {
            p: 2,
            labels: vec!["1".into(), "x".into(), "y".into()],
            one: e(0),
            mul: vec![(0, 0, e(0)), (0, 1, e(1)), (0, 2, e(2)), (1, 0, e(1)), (2, 0, e(2))],
        },
    }
}

struct Builder {
    entries: Vec<CorpusEntry>,
}

const SEMISIMPLE: Source = Source::Theory("semisimple modules satisfy every layer");
const SQUARE: Source = Source::Trivial("X ⊕ X form");
const INDECOMPOSABLE: Source = Source::Trivial("indecomposable, so no nonzero summand X ⊕ X");
const UNISERIAL: Source = Source::Derived("every submodule is indecomposable, so decompositions are trivial; simple socle");

fn ex(property: Property, value: bool, source: Source) -> Expectation {
    Expectation { property, value, source }
}

impl Builder {
    fn add(&mut self, ring: &'static str, name: &str, module: ModuleSpec, expected: Vec<Expectation>) {
        self.entries.push(CorpusEntry { name: format!("{ring} :: {name}"), ring, module, expected });
    }

    fn semisimple(&mut self, ring: &'static str, name: &str, module: ModuleSpec, square_free: Option<bool>) {
        let mut e = vec![
            ex(Property::Semisimple, true, Source::Trivial("direct sum of simples")),
            ex(Property::C4, true, SEMISIMPLE),
            ex(Property::C4Star, true, SEMISIMPLE),
            ex(Property::Swcs, true, SEMISIMPLE),
            ex(Property::Strong, true, SEMISIMPLE),
            ex(Property::Index(ObstructionIndex::Infinity), true, SEMISIMPLE),
        ];
        match square_free {
            Some(true) => e.push(ex(Property::SummandSquareFree, true, Source::Trivial("pairwise non-isomorphic simples"))),
            Some(false) => e.push(ex(Property::SummandSquareFree, false, SQUARE)),
            None => {}
        }
        self.add(ring, name, module, e);
    }

    fn uniserial(&mut self, ring: &'static str, name: &str, module: ModuleSpec) {
        let e = vec![
            ex(Property::Semisimple, false, Source::Derived("nonzero radical layer")),
            ex(Property::C4, true, UNISERIAL),
            ex(Property::C4Star, true, UNISERIAL),
            ex(Property::Swcs, true, UNISERIAL),
            ex(Property::Strong, true, UNISERIAL),
            ex(Property::SummandSquareFree, true, INDECOMPOSABLE),
        ];
        self.add(ring, name, module, e);
    }
}

fn reg() -> ModuleSpec {
    ModuleSpec::Regular
}

fn quo(by: Vec<Vec<u64>>) -> ModuleSpec {
    ModuleSpec::quotient(reg(), by)
}

fn sub(generators: Vec<Vec<u64>>) -> ModuleSpec {
    ModuleSpec::submodule(reg(), generators)
}

fn sum(parts: Vec<ModuleSpec>) -> ModuleSpec {
    ModuleSpec::direct_sum(parts)
}

/// The corpus, in a fixed order.
pub fn corpus_builtin() -> Vec<CorpusEntry> {
    let mut b = Builder { entries: Vec::new() };
    let not_c4 = Source::Derived(
        "the socle embedding of a simple summand into another summand is a mono with non-summand image",
    );
    let not_c4_star = Source::Theory("a module that is not C4 is not C4*");

    b.semisimple("F2", "regular", reg(), Some(true));
    b.semisimple("F2", "S+S", sum(vec![reg(), reg()]), Some(false));
    b.semisimple("F2", "S+S+S", sum(vec![reg(), reg(), reg()]), Some(false));
    b.semisimple("F3", "regular", reg(), Some(true));
    b.semisimple("F3", "S+S", sum(vec![reg(), reg()]), Some(false));

    let d = "F2[x]/(x^2)";
    let ds = || quo(vec![vec![0, 1]]);
    b.uniserial(d, "regular", reg());
    b.semisimple(d, "S", ds(), Some(true));
    b.add(
        d,
        "R+R/(x)",
        sum(vec![reg(), ds()]),
        vec![
            ex(Property::C4, false, not_c4),
            ex(Property::C4Star, false, not_c4_star),
            ex(Property::Strong, false, Source::Theory("strongly C4* modules are C4*")),
            ex(Property::SummandSquareFree, true, Source::Derived("Krull-Schmidt: summands R and S are not isomorphic")),
            ex(Property::Swcs, true, Source::Theory("summand-square-free modules are semi-weak-CS")),
            ex(Property::Index(ObstructionIndex::Infinity), true, Source::Derived("no obstruction pair: every socle line is the socle of a summand")),
        ],
    );
    b.semisimple(d, "S+S", sum(vec![ds(), ds()]), Some(false));
    b.semisimple(d, "soc(R)", ModuleSpec::socle(reg()), Some(true));
    b.semisimple(d, "soc(R+R/(x))", ModuleSpec::socle(sum(vec![reg(), ds()])), Some(false));
    b.add(
        d,
        "R+R",
        sum(vec![reg(), reg()]),
        vec![
            ex(Property::C4, true, Source::Derived("free over a self-injective ring, hence injective and C3")),
            ex(Property::C4Star, false, Source::Derived("contains R ⊕ xR ≅ R ⊕ S, which is not C4")),
            ex(Property::Swcs, true, Source::Derived("every socle line is the socle of a free summand")),
            ex(Property::Strong, false, Source::Theory("strongly C4* modules are C4*")),
            ex(Property::SummandSquareFree, false, SQUARE),
        ],
    );

    let c = "F2[x]/(x^3)";
    let cs = || quo(vec![vec![0, 1, 0]]);
    let cu = || quo(vec![vec![0, 0, 1]]);
    b.uniserial(c, "regular", reg());
    b.uniserial(c, "R/(x^2)", cu());
    b.semisimple(c, "S", cs(), Some(true));
    b.uniserial(c, "xR", sub(vec![vec![0, 1, 0]]));
    b.add(
        c,
        "R+R/(x)",
        sum(vec![reg(), cs()]),
        vec![
            ex(Property::C4, false, not_c4),
            ex(Property::C4Star, false, not_c4_star),
            ex(Property::SummandSquareFree, true, Source::Derived("Krull-Schmidt: summands R and S are not isomorphic")),
            ex(Property::Swcs, true, Source::Theory("summand-square-free modules are semi-weak-CS")),
        ],
    );
    b.add(
        c,
        "R+R/(x^2)",
        sum(vec![reg(), cu()]),
        vec![
            ex(Property::C4, false, Source::Derived("R/(x²) → xR ⊆ R is a mono whose image meets every cyclic copy of R")),
            ex(Property::SummandSquareFree, true, Source::Derived("Krull-Schmidt: summands R and R/(x²) are not isomorphic")),
        ],
    );
    b.semisimple(c, "S+S", sum(vec![cs(), cs()]), Some(false));

    let t = "T2(F2)";
    // Basis E11, E12, E22. P1 = e11·T is uniserial with socle E12·T ≅ S2 = e22·T.
    let p1 = || sub(vec![vec![1, 0, 0]]);
    let s1 = || quo(vec![vec![0, 1, 0], vec![0, 0, 1]]);
    let s2 = || sub(vec![vec![0, 0, 1]]);
    b.add(
        t,
        "regular",
        reg(),
        vec![
            ex(Property::C4, false, Source::Derived("left multiplication by E12 embeds e22·T onto the socle of e11·T")),
            ex(Property::C4Star, false, not_c4_star),
            ex(Property::SummandSquareFree, true, Source::Derived("Krull-Schmidt: e11·T and e22·T are not isomorphic")),
            ex(Property::Swcs, true, Source::Theory("summand-square-free modules are semi-weak-CS")),
        ],
    );
    b.uniserial(t, "e11*T", p1());
    b.semisimple(t, "S1", s1(), Some(true));
    b.semisimple(t, "S2", s2(), Some(true));
    b.semisimple(t, "S1+S2", sum(vec![s1(), s2()]), Some(true));
    b.semisimple(t, "S1+S1", sum(vec![s1(), s1()]), Some(false));
    b.semisimple(t, "S2+S2", sum(vec![s2(), s2()]), Some(false));
    b.semisimple(t, "soc(T)", ModuleSpec::socle(reg()), Some(false));
    b.add(t, "e11*T+S1", sum(vec![p1(), s1()]), vec![ex(Property::Semisimple, false, Source::Trivial("e11·T is not semisimple"))]);

    let m2 = "M2(F2)";
    let v = || sub(vec![vec![1, 0, 0, 0]]);
    b.semisimple(m2, "regular", reg(), Some(false));
    b.semisimple(m2, "V", v(), Some(true));
    b.semisimple(m2, "V+V+V", sum(vec![v(), v(), v()]), Some(false));

    let pr = "F2xF2";
    let sa = || sub(vec![vec![1, 0]]);
    let sb = || sub(vec![vec![0, 1]]);
    b.semisimple(pr, "regular", reg(), Some(true));
    b.semisimple(pr, "Sa", sa(), Some(true));
    b.semisimple(pr, "Sb", sb(), Some(true));
    b.semisimple(pr, "Sa+Sa", sum(vec![sa(), sa()]), Some(false));
    b.semisimple(pr, "Sa+Sa+Sb", sum(vec![sa(), sa(), sb()]), Some(false));

    let md = "M2(F2[x]/(x^2))";
    // Basis E_ij*b at (2i + j)·2 + b. V = e11·R is the image of R_R under the equivalence.
    let vd = || sub(vec![vec![1, 0, 0, 0, 0, 0, 0, 0]]);
    let wd = || ModuleSpec::quotient(vd(), vec![vec![0, 1, 0, 0]]);
    b.add(
        md,
        "regular",
        reg(),
        vec![
            ex(Property::C4, true, Source::Derived("corresponds to the free module of rank two over the dual numbers")),
            ex(Property::C4Star, false, Source::Derived("corresponds to R ⊕ R, which is not C4*")),
            ex(Property::SummandSquareFree, false, SQUARE),
        ],
    );
    b.uniserial(md, "V", vd());
    b.semisimple(md, "W", wd(), Some(true));
    b.add(
        md,
        "V+W",
        sum(vec![vd(), wd()]),
        vec![
            ex(Property::C4, false, Source::Derived("corresponds to R ⊕ R/(x) over the dual numbers")),
            ex(Property::C4Star, false, not_c4_star),
        ],
    );

    b.entries
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_builds() {
        let g = Guards::default();
        let rings = corpus_rings();
        for e in corpus_builtin() {
            let r = rings.iter().find(|r| r.name == e.ring).unwrap().build().unwrap();
            let m = e.build(&r, &g).unwrap();
            assert!(m.validate().is_ok(), "{}", e.name);
            assert!(!e.expected.is_empty(), "{}", e.name);
        }
    }

    #[test]
    fn required_entries_present() {
        let c = corpus_builtin();
        let find = |n: &str| c.iter().find(|e| e.name == n).unwrap();
        assert!(find("F2[x]/(x^2) :: R+R/(x)").expected.contains(&ex(
            Property::C4,
            false,
            Source::Derived("the socle embedding of a simple summand into another summand is a mono with non-summand image")
        )));
        assert!(find("F2[x]/(x^2) :: S+S").expected.iter().any(|x| x.property == Property::SummandSquareFree && !x.value));
        assert!(find("M2(F2) :: regular").expected.iter().any(|x| x.property == Property::Strong && x.value));
        let names: Vec<&str> = corpus_rings().iter().map(|r| r.name).collect();
        assert_eq!(names.len(), 8);
    }
}
