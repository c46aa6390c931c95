//! Automorphism group orders of Z^d and E8 by exhaustive search.

use std::time::Instant;

use unimass::oracle::{count_automorphisms, GramMatrix};

fn main() -> unimass::Result<()> {
    let e8 = GramMatrix::e8();
    println!("E8 Gram matrix (det {}):\n{e8}", e8.determinant());
    for (name, g) in [("Z^8", GramMatrix::identity(8)), ("E8", e8)] {
        let t = Instant::now();
        let c = count_automorphisms(&g)?;
        println!("{name}: |O| = {}, |SO| = {}  ({:.2?})", c.total, c.so_part, t.elapsed());
    }
    Ok(())
}
