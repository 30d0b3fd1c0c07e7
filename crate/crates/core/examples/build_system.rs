//! Build a Weyl group from a type descriptor and look at its roots,
//! elements, descents and Bruhat order.
//!
//! ```text
//! cargo run --example build_system -- B3
//! ```

use cxkit::{CoxeterSystem, Word};

fn main() -> cxkit::Result<()> {
    let descriptor = std::env::args().nth(1).unwrap_or_else(|| "B3".to_string());
    let sys = CoxeterSystem::build(&descriptor)?;
    println!("{} has rank {} and order {}", sys.descriptor(), sys.rank(), sys.order());

    println!("cartan matrix:");
    for row in sys.cartan_matrix() {
        println!("  {row:?}");
    }
    println!("{} positive roots, e.g. the highest {:?}", sys.positive_roots().len(), sys.positive_roots().last().unwrap());

    let layers = sys.elements()?;
    let sizes: Vec<usize> = {
        let mut counts = vec![0; sys.length(&sys.longest_element()) + 1];
        for x in &layers {
            counts[sys.length(x)] += 1;
        }
        counts
    };
    println!("elements by length: {sizes:?}");

    let w0 = sys.longest_element();
    println!("w0 = {} (length {})", sys.display_element(&w0), sys.length(&w0));

    let w: Word = "1 2 1 2".parse()?;
    let x = sys.element_from_word(&w)?;
    println!(
        "alpha({w}) = {}  left descents {}  right descents {}",
        sys.display_element(&x),
        sys.left_descents(&x),
        sys.right_descents(&x)
    );
    println!("P_x(q) = {}", sys.poincare_polynomial(&x)?);
    println!("below w0 in Bruhat order: {}", sys.bruhat_leq(&x, &w0));
    Ok(())
}
