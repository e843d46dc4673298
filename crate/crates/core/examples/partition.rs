//! The four cells of R_23, its order classes and the refinement of Q ± 1.
//!
//!     cargo run --example partition [p]

use chebres::criteria::CharPair;
use chebres::structure::{order_class_decomposition, partition, residue_shift_refinement};

fn main() -> chebres::Result<()> {
    let p = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(23);
    let table = partition(p)?;
    for cell in CharPair::CELLS {
        println!("A_{} = {:?}", cell.label(), table.set(cell));
    }

    let classes = order_class_decomposition(p)?;
    for (d, members) in &classes.classes {
        println!("I_{d} = {members:?}");
    }

    if p >= 5 {
        for part in residue_shift_refinement(p)?.parts {
            let kind = if part.symmetric { "symmetric" } else { "rest" };
            println!(
                "{:>3} {kind:9} = A_{} = {:?}, back {:?}",
                part.source.label(),
                part.cell.label(),
                part.set,
                part.back
            );
        }
    }
    Ok(())
}
