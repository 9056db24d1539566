use drumlab::geometry::*;
fn main() {
    let spec = DomainSpec::Composite {
        radii: RadiiTriple::new(1.0, 2.0, 3.0).unwrap(),
        n: 8,
        eps: 0.05,
    };
    for conn8 in [false, true] {
        let m = 2000usize;
        let lim = 3.05_f64;
        let step = 2.0 * lim / m as f64;
        let idx = |i: usize, j: usize| i * m + j;
        let mut outside = vec![false; m * m];
        for i in 0..m {
            let x = -lim + (i as f64 + 0.5) * step;
            for j in 0..m {
                let y = -lim + (j as f64 + 0.5) * step;
                outside[idx(i, j)] = !contains(&spec, Point2::new(x, y));
            }
        }
        let mut parent: Vec<u32> = (0..(m * m) as u32).collect();
        fn find(parent: &mut [u32], mut a: u32) -> u32 {
            while parent[a as usize] != a {
                parent[a as usize] = parent[parent[a as usize] as usize];
                a = parent[a as usize];
            }
            a
        }
        let mut union = |parent: &mut Vec<u32>, a: usize, b: usize| {
            let (x, y) = (find(parent, a as u32), find(parent, b as u32));
            parent[x as usize] = y;
        };
        for i in 0..m {
            for j in 0..m {
                if !outside[idx(i, j)] { continue; }
                if i + 1 < m && outside[idx(i + 1, j)] { union(&mut parent, idx(i, j), idx(i + 1, j)); }
                if j + 1 < m && outside[idx(i, j + 1)] { union(&mut parent, idx(i, j), idx(i, j + 1)); }
                if conn8 {
                    if i + 1 < m && j + 1 < m && outside[idx(i + 1, j + 1)] { union(&mut parent, idx(i, j), idx(i + 1, j + 1)); }
                    if i + 1 < m && j > 0 && outside[idx(i + 1, j - 1)] { union(&mut parent, idx(i, j), idx(i + 1, j - 1)); }
                }
            }
        }
        let mut roots = std::collections::HashSet::new();
        for c in 0..m * m {
            if outside[c] { roots.insert(find(&mut parent, c as u32)); }
        }
        println!("conn8={conn8}: components = {}", roots.len());
    }
}
