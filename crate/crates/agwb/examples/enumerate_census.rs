//! Builds the desk-scale census of LA-semigroups: for each order, the
//! number of tables, of isomorphism classes, and of both under each
//! property filter.
//!
//!     cargo run --release --example enumerate_census [MAX_ORDER] [--write]
//!
//! With `--write`, regenerates `CENSUS.md` in the current directory.

use agwb::enumerate::{count_la, Filter};

fn main() {
    let mut max_order = 4usize;
    let mut write = false;
    for arg in std::env::args().skip(1) {
        if arg == "--write" {
            write = true;
        } else {
            max_order = arg.parse().expect("MAX_ORDER must be a positive integer");
        }
    }

    let mut doc = String::new();
    doc.push_str("# Census of LA-semigroups at desk scale\n\n");
    doc.push_str("Counts produced by the enumerator; `tables` counts all labeled models,\n");
    doc.push_str("`classes` counts isomorphism classes. Regenerate with\n");
    doc.push_str("`cargo run --release --example enumerate_census -- --write`.\n\n");
    doc.push_str("## All LA-semigroups\n\n");
    doc.push_str("| order | tables | classes |\n|------:|-------:|--------:|\n");
    for n in 1..=max_order {
        let c = count_la(n, &[], true).expect("valid order");
        doc.push_str(&format!("| {} | {} | {} |\n", n, c.raw_count, c.iso_count.unwrap()));
        eprintln!("order {n}: {} tables, {} classes ({} ms)", c.raw_count, c.iso_count.unwrap(), c.elapsed_ms);
    }
    for filter in Filter::ALL {
        doc.push_str(&format!("\n## With {}\n\n", filter.name()));
        doc.push_str("| order | tables | classes |\n|------:|-------:|--------:|\n");
        for n in 1..=max_order {
            let c = count_la(n, &[filter], true).expect("valid order");
            doc.push_str(&format!("| {} | {} | {} |\n", n, c.raw_count, c.iso_count.unwrap()));
        }
    }

    if write {
        std::fs::write("CENSUS.md", &doc).expect("write CENSUS.md");
        eprintln!("wrote CENSUS.md");
    } else {
        print!("{doc}");
    }
}
