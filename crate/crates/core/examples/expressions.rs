//! The group expression language: parsing, syntax trees, errors.

use mnn::dsl::parse_expr;

fn main() {
    for text in [
        "S(3)",
        "C(3):C(2)@2",
        "S(3) x C(3) x C(2)",
        "A(4) x (C(5) x C(2))",
        "Perm[(0 3 6)(1 7 4);(0 5 1 2)(3 6 7 4)]",
        "D(7)",
        "C(5):C(2)@2",
        "S(3) x",
    ] {
        match parse_expr(text) {
            Ok(ast) => {
                let g = ast.to_spec().build();
                println!("{ast}  (order {:?})", g.map(|g| g.order()).ok());
                print!("{}", ast.tree());
            }
            Err(e) => println!("{}", e.render(text)),
        }
    }
}
