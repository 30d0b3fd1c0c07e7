//! F-conjugacy classes, their minimal length elements, and descent by
//! cyclic shifts.
//!
//! ```text
//! cargo run --example f_classes -- 2A3
//! ```

use cxkit::fconj::{all_f_classes, reduce_to_min, shifts_to, descent_step};
use cxkit::twist::registry_twist;

fn main() -> cxkit::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "2A3".to_string());
    let tw = registry_twist(&name)?;
    let sys = tw.system();
    let classes = all_f_classes(&tw)?;
    println!("{name}: {} F-classes", classes.len());
    for c in &classes {
        let minimal: Vec<String> = c.minimal_elements().iter().map(|x| sys.display_element(x).to_string()).collect();
        println!(
            "  size {:>3}  min length {}  {}  minimal {}",
            c.len(),
            c.min_length(),
            if c.is_elliptic() { "elliptic" } else { "        " },
            minimal.join(" ")
        );
    }

    let x = sys.longest_element();
    println!("descent from w0 = {}:", sys.display_element(&x));
    match descent_step(&tw, &x) {
        None => println!("  already minimal"),
        Some(_) => {
            let (x0, path) = reduce_to_min(&tw, &x)?;
            for step in &path.steps {
                println!("  by s{} -> {}", step.generator + 1, sys.display_element(&step.result));
            }
            println!("  minimal element {}", sys.display_element(&x0));
        }
    }

    // Minimal length elements of an elliptic class reach one another by shifts.
    if let Some(c) = classes.iter().rev().find(|c| c.is_elliptic() && c.minimal_elements().len() > 1) {
        let (a, b) = (&c.minimal_elements()[0], &c.minimal_elements()[1]);
        let path = shifts_to(&tw, a, b, 100_000)?.expect("connected");
        println!(
            "{} -> {} via generators {:?}",
            sys.display_element(a),
            sys.display_element(b),
            path.generators().iter().map(|s| s + 1).collect::<Vec<_>>()
        );
    }
    Ok(())
}
