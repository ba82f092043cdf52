// temporary probe
use rigidity::{estimate_gac, generate, known_gac, FamilySpec, OptimizerConfig};

#[test]
fn probe_k_n_d3() {
    for n in 4..=8usize {
        let g = generate(&FamilySpec::Complete { n }).unwrap();
        let est = estimate_gac(&g, 3, &OptimizerConfig::default()).unwrap();
        let known = known_gac(&FamilySpec::Complete { n }, 3).unwrap();
        println!(
            "K{n} d=3: estimate {:.6} lower {:?} upper {:?}",
            est.value,
            known.lower(),
            known.upper()
        );
    }
}
