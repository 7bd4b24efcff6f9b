//! Registers an extra witness rule and runs the C4 transport check under it.

use c4lab::conditions::{RuleRegistry, WitnessFacts, WitnessRule};
use c4lab::harness::{cmd_suite, SuiteOptions};
use c4lab::module::Submodule;
use std::sync::Arc;

/// Every image, injective or not, must split.
struct AllImagesSplit;

impl WitnessRule for AllImagesSplit {
    fn id(&self) -> &str {
        "all-images-split"
    }

    fn description(&self) -> &str {
        "for M = A ⊕ B and any f: A → B, im f is a direct summand of M"
    }

    fn judge(&self, facts: &WitnessFacts, is_summand: &dyn Fn(&Submodule) -> bool) -> Option<String> {
        (!is_summand(facts.image)).then(|| "im f is not a direct summand".to_string())
    }
}

fn main() -> c4lab::Result<()> {
    let mut registry = RuleRegistry::default();
    registry.register(Arc::new(AllImagesSplit))?;
    let rule = registry.get("all-images-split")?;
    let report = cmd_suite(&SuiteOptions { filter: Some("c4-morita".into()), rule, ..SuiteOptions::default() });
    print!("{}", report.to_text());
    Ok(())
}
