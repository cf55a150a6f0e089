//! The dihedral relations W_R and the quotient W/W_R.

use lsdual::dihedral::{compute_w1even, compute_wr, compute_wsh, compute_wstar, cycle_check, w_basis};

fn main() -> lsdual::Result<()> {
    println!("m  k  dim W  W_*  W_sh  W_1even  W_R  W/W_R");
    for m in 1..=3 {
        for k in m..=8 {
            let wr = compute_wr(m, k)?;
            println!(
                "{m}  {k}  {:>5}  {:>3}  {:>4}  {:>7}  {:>3}  {:>5}",
                w_basis(m, k).len(),
                compute_wstar(m, k)?.dim(),
                compute_wsh(m, k)?.dim(),
                compute_w1even(m, k)?.dim(),
                wr.dim(),
                wr.codim()
            );
            assert!(cycle_check(m, k)?);
        }
    }
    Ok(())
}
