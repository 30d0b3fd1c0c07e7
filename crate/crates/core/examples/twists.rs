//! Graph automorphisms: registry twists, explicit cycle notation, orbits
//! and the action on elements.
//!
//! ```text
//! cargo run --example twists
//! ```

use std::sync::Arc;

use cxkit::twist::{parse_cycles, registry_twist};
use cxkit::{CoxeterSystem, Twist, Word};

fn main() -> cxkit::Result<()> {
    for name in ["2A3", "2D4", "3D4", "2E6", "2B2", "2G2", "2F4", "A2x2A2"] {
        let tw = registry_twist(name)?;
        print!("{name:>7}: sigma {:<14} order {}  orbits {}", tw.display_sigma(), tw.order(), tw.f_orbits());
        match tw.q_constraint() {
            Some(c) => println!("  ({c})"),
            None => println!(),
        }
    }

    // The same flip on A3, given explicitly.
    let sys = Arc::new(CoxeterSystem::build("A3")?);
    let tw = Twist::new(sys.clone(), parse_cycles("(1 3)", 3)?)?;
    let x = sys.element_from_word(&"1 2".parse::<Word>()?)?;
    println!("F(alpha(1 2)) = {}", sys.display_element(&tw.apply(&x)));
    println!("registry label of the explicit twist: {:?}", tw.label());

    // Not a diagram automorphism of A3.
    match Twist::new(sys, parse_cycles("(1 2)", 3)?) {
        Ok(_) => println!("unexpected"),
        Err(e) => println!("(1 2) rejected: {e}"),
    }
    Ok(())
}
