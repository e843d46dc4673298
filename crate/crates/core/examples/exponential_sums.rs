//! Exponential sums over the four cells of R_p against √p + 5/4.
//!
//!     cargo run --release --example exponential_sums

use chebres::criteria::CharPair;
use chebres::expsum::{difference_lemma_check, expsum_sweep, partition_sums};

fn main() -> chebres::Result<()> {
    let r = partition_sums(23)?;
    for cell in CharPair::CELLS {
        let g = r.cell(cell);
        println!("g_{} = {:+.4} {:+.4}i", cell.label(), g.re, g.im);
    }
    println!("S = {:.4}, bound {:.4}", r.s.norm(), r.bound);
    println!(
        "difference identities hold: {}",
        difference_lemma_check(23)?.holds
    );

    let sweep = expsum_sweep(3000)?;
    let worst = sweep
        .iter()
        .max_by(|a, b| a.max_ratio.total_cmp(&b.max_ratio))
        .expect("nonempty sweep");
    println!(
        "{} primes up to 3000; largest |g|/sqrt(p) = {:.4} at p = {}",
        sweep.len(),
        worst.max_ratio,
        worst.p
    );
    assert!(sweep.iter().all(|r| r.within_bound() && r.weil_holds()));
    Ok(())
}
