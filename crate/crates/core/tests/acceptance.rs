//! Runs the eight reproduction criteria and prints one line per criterion.
//! Failing rows are printed in full and the process exits nonzero.

use kaci::verify::Suite;

fn main() {
    let suite = Suite::default();
    let reports = suite.run_all(|r| {
        println!("{} [{:.1}s]", r.summary(), r.elapsed.as_secs_f64());
        for row in r.rows.iter().filter(|row| !row.pass) {
            println!("    {row}");
        }
    });
    let failed = reports.iter().filter(|r| !r.pass()).count();
    println!("acceptance: {}/{} criteria pass", reports.len() - failed, reports.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
