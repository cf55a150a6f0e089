use lsdual::context::Context;
use lsdual::verify::dimension_table;

fn main() -> lsdual::Result<()> {
    println!("m,k,ls,D,dsh,vf");
    for r in dimension_table(&Context::default(), 3, 10)? {
        let dsh = r.dsh.map_or("-".into(), |d| d.to_string());
        println!("{},{},{},{},{},{}", r.m, r.k, r.ls, r.d, dsh, r.vf);
    }
    Ok(())
}
