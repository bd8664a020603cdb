//! Exact-cover search for orthogonal pairs. Order 6 runs to exhaustion.

use qmask::latin::{mols_search, DEFAULT_NODE_BUDGET};

fn main() {
    let orders: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|s| s.parse().ok())
        .collect();
    let orders = if orders.is_empty() { vec![2, 3, 4, 5, 6, 7] } else { orders };
    for d in orders {
        let r = mols_search(d, DEFAULT_NODE_BUDGET);
        println!("{r}");
        if let Some(p) = r.pair() {
            println!("{}\n{}", p.first(), p.second());
        }
    }
}
