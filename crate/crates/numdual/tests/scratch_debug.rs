//! Temporary diagnostics; removed before release.

mod common;

use common::*;
use numdual::mourrain::mourrain_dual;
use numdual::order::LocalOrder;
use numdual::sylvester::sylvester_dual;

#[test]
#[ignore]
fn dump_system_6() {
    let sys = &regression_systems(20)[6];
    let order = LocalOrder::antigraded_lex(sys.nvars);
    let names: Vec<String> = (1..=sys.nvars).map(|i| format!("x{}", i)).collect();
    println!("nvars = {}", sys.nvars);
    for g in &sys.gens_q {
        println!("gen: {}", g.format(&names, &order));
    }
    println!("oracle corners: {:?}", sys.oracle_corners);
    for d in 0..=10 {
        let s = sylvester_dual(&sys.gens_c, d, 1e-8, &order);
        let m = mourrain_dual(&sys.gens_c, d, 1e-8, &order, true);
        match (s, m) {
            (Ok(s), Ok(m)) => {
                println!(
                    "d={} sylv dim {} leads {:?}",
                    d,
                    s.dim(),
                    s.lead_set(&order).iter().map(|x| x.to_string()).collect::<Vec<_>>()
                );
                println!(
                    "d={} mour dim {} leads {:?}",
                    d,
                    m.dim(),
                    m.lead_set(&order).iter().map(|x| x.to_string()).collect::<Vec<_>>()
                );
            }
            (s, m) => {
                println!("d={} sylv: {:?} mour: {:?}", d, s.map(|b| b.dim()), m.map(|b| b.dim()));
                break;
            }
        }
    }
}
