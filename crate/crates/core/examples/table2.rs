//! Even dimension d = 2n: rational entries alternate with zeta(n) and L(n, chi_-4) ones.

use unimass::massformula::{column_labels, generate_table, Parity};

fn main() -> unimass::Result<()> {
    let labels = column_labels(Parity::Even);
    println!("n    {}", labels.iter().map(|l| format!("{l:<52}")).collect::<String>());
    for row in generate_table(Parity::Even, 10)? {
        let cells: String = row.cells.iter().map(|c| format!("{:<52}", c.mass.to_string())).collect();
        println!("{:<4} {}", row.n, cells.trim_end());
    }
    Ok(())
}
