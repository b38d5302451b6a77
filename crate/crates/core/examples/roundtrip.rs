use focal_core::classify::classify;
use focal_core::generators::{generate, GenSpec};
use focal_core::sampling::SamplingConfig;
use focal_core::ClassLabel;
use std::time::Instant;

fn main() {
    let n: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let mut classes: Vec<ClassLabel> = ClassLabel::PAPER_CLASSES.to_vec();
    classes.push(ClassLabel::IrreducibleConic);
    for class in classes {
        let t = Instant::now();
        let mut ok = 0;
        for seed in 0..n {
            let g = generate(&GenSpec::new(class, seed)).unwrap();
            match classify(&g.chart, &SamplingConfig::with_seed(seed)) {
                Ok(r) if r.label == class => ok += 1,
                Ok(r) => println!("  {class} seed {seed}: got {} dims {:?} dirs {:?} rank {:?}", r.label, r.dims, r.directions, r.conic_rank),
                Err(e) => println!("  {class} seed {seed}: error {e}"),
            }
        }
        println!("{class}: {ok}/{n} in {:?}", t.elapsed());
    }
}
