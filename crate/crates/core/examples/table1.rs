//! Masses of odd unimodular lattices in odd dimension d = 2n + 1.

use unimass::massformula::{column_labels, generate_table, Parity};
use unimass::numeric::{eval, PrecisionContext};

fn main() -> unimass::Result<()> {
    let ctx = PrecisionContext::with_digits(12)?;
    let labels = column_labels(Parity::Odd);
    for (col, label) in labels.iter().enumerate() {
        println!("r - s = {label} (mod 8)");
        for row in generate_table(Parity::Odd, 10)? {
            let m = &row.cells[col].mass;
            println!("{:>4}  {:<52} ~ {}", row.n, m.to_string(), eval(m, &ctx)?);
        }
    }
    Ok(())
}
