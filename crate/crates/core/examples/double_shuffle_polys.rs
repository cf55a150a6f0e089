//! Polynomials killed by the shuffle-symmetrization operators.

use lsdual::commring::{apply_tsh, apply_tstar, compute_dsh};

fn main() -> lsdual::Result<()> {
    for m in 2..=3 {
        for d in 0..=6 {
            let dsh = compute_dsh(m, d)?;
            print!("Dsh_{m}({d}) = {}", dsh.dim());
            if let Some(p) = dsh.polys().first() {
                print!("   e.g. {p}");
                for l in 1..m {
                    assert!(apply_tstar(p, l)?.is_zero());
                    assert!(apply_tsh(p, l)?.is_zero());
                }
            }
            println!();
        }
    }
    Ok(())
}
