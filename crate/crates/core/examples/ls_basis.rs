//! Bases of the linearized double shuffle space in low bidegrees.

use lsdual::lsspace::{compute_ls, compute_ls_by_complement};
use lsdual::ncalg::{coproduct_sh, NcPoly, Word};

fn main() -> lsdual::Result<()> {
    for (m, k) in [(1, 3), (1, 5), (2, 8), (3, 9)] {
        let ls = compute_ls(m, k)?;
        println!("ls_{m}^{k}: dim {}", ls.dim());
        for p in ls.elements().iter().take(2) {
            println!("  {p}");
        }
        // Every element is primitive for the shuffle coproduct.
        for p in ls.elements() {
            let delta = coproduct_sh(&p);
            let one = NcPoly::basis(Word::EMPTY);
            let prim = &lsdual::lincomb::Tensor::pure(&p, &one) + &lsdual::lincomb::Tensor::pure(&one, &p);
            assert_eq!(delta, prim);
        }
        assert_eq!(compute_ls_by_complement(m, k)?.space, ls.space);
    }
    Ok(())
}
