//! The Ihara bracket of two ls elements lands in ls again.

use lsdual::lsspace::{check_closure, compute_ls};
use lsdual::ncalg::ihara_bracket;

fn main() -> lsdual::Result<()> {
    let a = compute_ls(1, 3)?;
    let b = compute_ls(1, 5)?;
    let (p, q) = (&a.elements()[0], &b.elements()[0]);
    let br = ihara_bracket(p, q);
    println!("{{{p}, {q}}} has {} terms", br.len());
    let target = compute_ls(2, 8)?;
    println!("in ls_2^8: {}", target.contains(&br)?);

    let report = check_closure(&a, &b)?;
    println!("pairs checked: {}, nonzero: {}, passed: {}", report.pairs_checked, report.nonzero_brackets, report.passed());
    Ok(())
}
