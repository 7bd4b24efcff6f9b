use super::{Decomposition, ModuleContext};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::module::{ModuleHom, RightModule, Submodule};
use serde::Serialize;
use std::sync::Arc;

/// What a rule may look at: the map's injectivity, and its kernel and image as submodules of M.
pub struct WitnessFacts<'a> {
    pub injective: bool,
    pub kernel: &'a Submodule,
    pub image: &'a Submodule,
}

/// A splitting clause for C4-test data (M = A ⊕ B, f: A → B).
pub trait WitnessRule: Send + Sync {
    fn id(&self) -> &str;
    fn description(&self) -> &str;
    /// `Some(detail)` when the datum is a defect.
    fn judge(&self, facts: &WitnessFacts, is_summand: &dyn Fn(&Submodule) -> bool) -> Option<String>;
}

/// Default: an injective f: A → B between complementary summands has im f ≤⊕ M.
pub struct MonoImageSplits;

impl WitnessRule for MonoImageSplits {
    fn id(&self) -> &str {
        "mono-image-splits"
    }

    fn description(&self) -> &str {
        "for M = A ⊕ B and injective f: A → B, im f is a direct summand of M"
    }

    fn judge(&self, facts: &WitnessFacts, is_summand: &dyn Fn(&Submodule) -> bool) -> Option<String> {
        if facts.injective && !is_summand(facts.image) {
            Some("f is injective but im f is not a direct summand".into())
        } else {
            None
        }
    }
}

/// ker f ≤⊕ A forces im f ≤⊕ B. This is the clause of the original C4 definition.
pub struct KernelSummandImageSplits;

impl WitnessRule for KernelSummandImageSplits {
    fn id(&self) -> &str {
        "kernel-summand-image-splits"
    }

    fn description(&self) -> &str {
        "for M = A ⊕ B and f: A → B with ker f a direct summand, im f is a direct summand of M"
    }

    fn judge(&self, facts: &WitnessFacts, is_summand: &dyn Fn(&Submodule) -> bool) -> Option<String> {
        // Summands of A are exactly the summands of M contained in A.
        if is_summand(facts.kernel) && !is_summand(facts.image) {
            Some("ker f is a direct summand but im f is not".into())
        } else {
            None
        }
    }
}

/// Registered witness rules, looked up by id.
#[derive(Clone)]
pub struct RuleRegistry {
    rules: Vec<Arc<dyn WitnessRule>>,
}

impl Default for RuleRegistry {
    fn default() -> Self {
        RuleRegistry { rules: vec![Arc::new(MonoImageSplits), Arc::new(KernelSummandImageSplits)] }
    }
}

impl RuleRegistry {
    pub fn register(&mut self, rule: Arc<dyn WitnessRule>) -> Result<()> {
        if self.rules.iter().any(|r| r.id() == rule.id()) {
            return Err(Error::Precondition(format!("rule `{}` is already registered", rule.id())));
        }
        self.rules.push(rule);
        Ok(())
    }

    pub fn get(&self, id: &str) -> Result<Arc<dyn WitnessRule>> {
        self.rules.iter().find(|r| r.id() == id).cloned().ok_or_else(|| Error::UnknownRule(id.into()))
    }

    pub fn default_rule(&self) -> Arc<dyn WitnessRule> {
        self.rules[0].clone()
    }

    pub fn ids(&self) -> Vec<String> {
        self.rules.iter().map(|r| r.id().to_string()).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Valid,
    Defect,
}

/// One evaluated C4-test datum.
#[derive(Debug, Clone)]
pub struct WitnessRecord {
    pub decomposition: Arc<Decomposition>,
    pub f: ModuleHom,
    /// In the coordinates of M.
    pub kernel: Submodule,
    pub image: Submodule,
    pub rule_id: String,
    pub verdict: Verdict,
    pub detail: Option<String>,
}

impl WitnessRecord {
    pub fn is_defect(&self) -> bool {
        self.verdict == Verdict::Defect
    }
}

/// Kernel and image in M-coordinates of a map A → B given in basis coordinates.
pub(crate) fn kernel_image(dec: &Decomposition, f: &Matrix) -> (bool, Submodule, Submodule) {
    let ker = f.left_kernel();
    let injective = ker.is_zero();
    let kernel = ker.image(&dec.a.basis_matrix());
    let image = f.mul(&dec.b.basis_matrix()).row_space();
    (injective, kernel, image)
}

pub(crate) fn judge(
    ctx: &ModuleContext,
    rule: &dyn WitnessRule,
    injective: bool,
    kernel: &Submodule,
    image: &Submodule,
) -> Option<String> {
    let facts = WitnessFacts { injective, kernel, image };
    rule.judge(&facts, &|s| ctx.is_summand(s))
}

pub(crate) fn record(
    ctx: &ModuleContext,
    dec: &Arc<Decomposition>,
    f: &Matrix,
    rule: &dyn WitnessRule,
) -> WitnessRecord {
    let (injective, kernel, image) = kernel_image(dec, f);
    let detail = judge(ctx, rule, injective, &kernel, &image);
    let m = ctx.module();
    let f = ModuleHom::new_unchecked(&m.submodule_module(&dec.a), &m.submodule_module(&dec.b), f.clone());
    WitnessRecord {
        decomposition: dec.clone(),
        f,
        kernel,
        image,
        rule_id: rule.id().to_string(),
        verdict: if detail.is_some() { Verdict::Defect } else { Verdict::Valid },
        detail,
    }
}

/// Evaluates one datum (dec, f) under a rule. f is given on the bases of A and B.
pub fn evaluate_witness(
    m: &RightModule,
    dec: &Decomposition,
    f: &ModuleHom,
    rule: &dyn WitnessRule,
) -> Result<WitnessRecord> {
    evaluate_witness_in(&ModuleContext::new(m, &crate::guards::Guards::default()), dec, f, rule)
}

/// As `evaluate_witness`, reusing the summand cache of a context.
pub fn evaluate_witness_in(
    ctx: &ModuleContext,
    dec: &Decomposition,
    f: &ModuleHom,
    rule: &dyn WitnessRule,
) -> Result<WitnessRecord> {
    let m = ctx.module();
    if f.source().dim() != dec.a.dim() {
        return Err(Error::DimensionMismatch { expected: dec.a.dim(), found: f.source().dim() });
    }
    if f.target().dim() != dec.b.dim() {
        return Err(Error::DimensionMismatch { expected: dec.b.dim(), found: f.target().dim() });
    }
    if dec.parent.dim() != m.dim() {
        return Err(Error::DimensionMismatch { expected: m.dim(), found: dec.parent.dim() });
    }
    // f must be a hom between the submodule structures on A and B.
    ModuleHom::new(&m.submodule_module(&dec.a), &m.submodule_module(&dec.b), f.matrix().clone())?;
    Ok(record(ctx, &Arc::new(dec.clone()), f.matrix(), rule))
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::conditions::enumerate_decompositions;
    use crate::guards::Guards;
    use crate::linalg::Subspace;

    fn defect_datum() -> (RightModule, Decomposition, ModuleHom) {
        let m = r_plus_s();
        let f = m.field();
        // A = S-component, B = R-component, f sends the generator to x ∈ B.
        let a = Subspace::from_vectors(f, 3, vec![vec![0, 0, 1]]);
        let b = Subspace::from_vectors(f, 3, vec![vec![1, 0, 0], vec![0, 1, 0]]);
        let dec = enumerate_decompositions(&m, &Guards::default())
            .unwrap()
            .into_iter()
            .find(|d| d.a == a && d.b == b)
            .unwrap();
        let hom = ModuleHom::new(
            &m.submodule_module(&a),
            &m.submodule_module(&b),
            Matrix::from_rows(f, 2, &[vec![0, 1]]),
        )
        .unwrap();
        (m, dec, hom)
    }

    #[test]
    fn socle_embedding_is_a_defect() {
        let (m, dec, hom) = defect_datum();
        let w = evaluate_witness(&m, &dec, &hom, &MonoImageSplits).unwrap();
        assert!(w.is_defect());
        assert_eq!(w.image.basis(), &[vec![0, 1, 0]]);
        assert!(w.kernel.is_zero());
        // The kernel rule sees the same datum: ker f = 0 is a summand, im f is not.
        let k = evaluate_witness(&m, &dec, &hom, &KernelSummandImageSplits).unwrap();
        assert!(k.is_defect());
    }

    #[test]
    fn zero_map_is_valid() {
        let (m, dec, hom) = defect_datum();
        let zero = ModuleHom::zero(hom.source(), hom.target());
        let w = evaluate_witness(&m, &dec, &zero, &MonoImageSplits).unwrap();
        assert_eq!(w.verdict, Verdict::Valid);
        assert_eq!(w.kernel, dec.a);
        assert!(w.image.is_zero());
    }

    #[test]
    fn mismatched_shapes_are_rejected() {
        let (m, dec, _) = defect_datum();
        let s = dec.swapped();
        let wrong = ModuleHom::zero(&m.submodule_module(&s.b), &m.submodule_module(&s.a));
        assert!(evaluate_witness(&m, &s, &wrong, &MonoImageSplits).is_err());
    }

    #[test]
    fn registry_lookup() {
        let mut reg = RuleRegistry::default();
        assert_eq!(reg.default_rule().id(), "mono-image-splits");
        assert!(reg.get("kernel-summand-image-splits").is_ok());
        assert!(matches!(reg.get("nope"), Err(Error::UnknownRule(_))));
        assert!(reg.register(Arc::new(MonoImageSplits)).is_err());
        assert_eq!(reg.ids().len(), 2);
    }
}
