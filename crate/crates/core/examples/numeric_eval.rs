//! Decimal evaluation with two independent methods per constant.
//! Usage: cargo run --example numeric_eval [DIGITS]

use unimass::exact::pretty;
use unimass::numeric::{beta_numeric, eval, pi_numeric, zeta_numeric, PrecisionContext};

fn main() -> unimass::Result<()> {
    let digits = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(50);
    let ctx = PrecisionContext::with_digits(digits)?;
    println!("pi       = {}", pi_numeric(&ctx)?);
    println!("zeta(3)  = {}", zeta_numeric(3, &ctx)?);
    println!("Catalan  = {}", beta_numeric(2, &ctx)?);
    for text in ["beta(2)/(12*pi^2)", "46890249067*zeta(9)/(17125957680758784000*pi^9)", "691*beta(8)/(896690995200*pi^8)"] {
        let v = pretty::parse(text)?;
        println!("{text} = {}", eval(&v, &ctx)?);
    }
    Ok(())
}
