//! Frobenius recognition and the F(p,d) decomposition of G/Z_inf(G).

use mnn::classify::{frobenius_recognize, ved_decomposition};
use mnn::dsl::parse_expr;
use mnn::report::VedReport;

fn main() -> mnn::error::Result<()> {
    for expr in ["S(3)", "F(2,3)", "F(7,3)", "F(3,4)", "D(8)"] {
        let g = parse_expr(expr).unwrap().to_spec().build()?;
        match frobenius_recognize(&g) {
            Some(c) => println!(
                "{expr:<7} kernel {:>2} complement {:>2} (p,m,d) {:?} exponents {:?}",
                c.kernel.order(),
                c.complement.order(),
                c.fpd(),
                c.exponent_checks
                    .iter()
                    .map(|e| (e.q, e.exponent))
                    .collect::<Vec<_>>()
            ),
            None => println!("{expr:<7} not Frobenius"),
        }
    }
    for expr in [
        "S(3) x C(3)",
        "S(3) x A(4)",
        "S(3) x S(3)",
        "S(4)",
        "F(3,4)",
    ] {
        let g = parse_expr(expr).unwrap().to_spec().build()?;
        println!("\n{expr}");
        print!("{}", VedReport::new(&ved_decomposition(&g)?).to_text());
    }
    Ok(())
}
