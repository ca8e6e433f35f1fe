//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use wavefront_core::gggr::{unipotent_support, wave_front, Gggr, Series};
use wavefront_core::green::{build_omega, green_tables, group_order_poly, lusztig_solve, principal_block};
use wavefront_core::orbits::{induced_orbit, orbits_of, weight_spaces};
use wavefront_core::partition::{partitions, Partition};
use wavefront_core::poly::{rat, Poly, Rational};
use wavefront_core::ratfunc::RatFunc;
use wavefront_core::rootdata::{classify_prime, general_linear, named, proximate_cover, simply_connected, Family, RootDatum};
use wavefront_core::weyl::{character_table, fake_degrees, j_induction, CharTable, ReflectionSubgroup, WeylGroup};

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn setup(d: &RootDatum) -> Result<(WeylGroup, CharTable), String> {
    let w = WeylGroup::generate(d).map_err(|e| e.to_string())?;
    let t = character_table(&w).map_err(|e| e.to_string())?;
    Ok((w, t))
}

fn datum(name: &str) -> Result<RootDatum, String> {
    named(name).map_err(|e| e.to_string())
}

fn gl(n: usize) -> RootDatum {
    general_linear(n).unwrap()
}

fn poly(c: &[i64]) -> RatFunc {
    RatFunc::from_poly(Poly::from_i64s(c))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

fn q_int(k: usize) -> Poly {
    Poly::from_i64s(&vec![1; k])
}

fn n_stat(p: &Partition) -> usize {
    p.parts().iter().enumerate().map(|(i, &x)| i * x).sum()
}

fn conj(p: &Partition) -> Partition {
    let cols: Vec<usize> = (0..p.part(0)).map(|j| p.parts().iter().filter(|&&x| x > j).count()).collect();
    Partition::new(cols)
}

fn dominates(a: &Partition, b: &Partition) -> bool {
    let (mut sa, mut sb) = (0, 0);
    for i in 0..a.len().max(b.len()) {
        sa += a.part(i);
        sb += b.part(i);
        if sa < sb {
            return false;
        }
    }
    true
}

/// Ω, P, Λ for GL2 in the order (regular, zero).
fn criterion_1() -> Check {
    let (w, t) = setup(&gl(2))?;
    let (block, g) = green_tables(&w, &t).map_err(|e| e.to_string())?;
    let labels: Vec<&str> = block.pairs.iter().map(|p| p.orbit.as_str()).collect();
    ensure(labels == ["(2)", "(1,1)"], || format!("order {labels:?}"))?;
    let one = RatFunc::one();
    let zero = RatFunc::zero();
    let expect_omega = [[poly(&[0, 0, 1]), one.clone()], [one.clone(), one.clone()]];
    let expect_p = [[one.clone(), zero.clone()], [one.clone(), one.clone()]];
    let expect_l = [[poly(&[-1, 0, 1]), zero.clone()], [zero, one]];
    for i in 0..2 {
        for j in 0..2 {
            ensure(g.omega[(i, j)] == expect_omega[i][j], || format!("Ω[{i}][{j}] = {}", g.omega[(i, j)]))?;
            ensure(g.p[(i, j)] == expect_p[i][j], || format!("P[{i}][{j}] = {}", g.p[(i, j)]))?;
            ensure(g.lambda[(i, j)] == expect_l[i][j], || format!("Λ[{i}][{j}] = {}", g.lambda[(i, j)]))?;
        }
    }
    Ok("Ω = [[q^2,1],[1,1]], P = [[1,0],[1,1]], Λ = diag(q^2-1,1)".into())
}

/// `PᵀΛP = Ω` and the same solution for every ordering of the block.
fn criterion_2() -> Check {
    let mut solved = 0;
    for name in ["GL3", "GL4", "SL2", "SL3", "SL4", "SO5", "Spin5", "G2"] {
        let (w, t) = setup(&datum(name)?)?;
        let block = principal_block(&w, &t).map_err(|e| e.to_string())?;
        let omega = build_omega(&w, &t, &block).map_err(|e| e.to_string())?;
        let base = lusztig_solve(&omega, &block).map_err(|e| format!("{name}: {e}"))?;
        ensure(base.p.transpose().mul(&base.lambda).mul(&base.p) == omega, || format!("{name}: identity fails"))?;
        for perm in permutations(block.pairs.len()) {
            let g = lusztig_solve(&omega.select(&perm, &perm), &block.permuted(&perm))
                .map_err(|e| format!("{name} {perm:?}: {e}"))?;
            ensure(g.p == base.p.select(&perm, &perm) && g.lambda == base.lambda.select(&perm, &perm), || {
                format!("{name}: ordering {perm:?} gives a different solution")
            })?;
            solved += 1;
        }
    }
    Ok(format!("8 blocks, {solved} orderings"))
}

/// Lascoux–Schützenberger charge of a word with partition content.
fn charge(word: &[usize]) -> usize {
    let mut letters: Vec<Option<usize>> = word.iter().map(|&x| Some(x)).collect();
    let n = letters.len();
    let mut total = 0;
    while letters.iter().any(Option::is_some) {
        let mut pos = n;
        let mut index = 0;
        for k in 1.. {
            if !letters.contains(&Some(k)) {
                break;
            }
            let mut p = pos;
            let mut wrapped = false;
            loop {
                if p == 0 {
                    p = n;
                    wrapped = true;
                }
                p -= 1;
                if letters[p] == Some(k) {
                    break;
                }
            }
            if k > 1 && wrapped {
                index += 1;
            }
            total += index;
            letters[p] = None;
            pos = p;
        }
    }
    total
}

/// Reading words (bottom row first) of the semistandard tableaux of a shape
/// and content.
fn ssyt_words(shape: &Partition, content: &Partition) -> Vec<Vec<usize>> {
    fn fill(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, left: &mut [usize], out: &mut Vec<Vec<usize>>) {
        if k == cells.len() {
            out.push(grid.iter().rev().flatten().copied().collect());
            return;
        }
        let (r, c) = cells[k];
        for v in 1..=left.len() {
            if left[v - 1] == 0 || (c > 0 && grid[r][c - 1] > v) || (r > 0 && grid[r - 1][c] >= v) {
                continue;
            }
            left[v - 1] -= 1;
            grid[r][c] = v;
            fill(k + 1, cells, grid, left, out);
            left[v - 1] += 1;
        }
    }
    let cells: Vec<(usize, usize)> =
        shape.parts().iter().enumerate().flat_map(|(r, &l)| (0..l).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
    let mut left = content.parts().to_vec();
    let mut out = Vec::new();
    fill(0, &cells, &mut grid, &mut left, &mut out);
    out
}

fn kostka_foulkes(lambda: &Partition, mu: &Partition) -> Poly {
    ssyt_words(lambda, mu).iter().fold(Poly::zero(), |s, w| s + Poly::monomial(rat(1), charge(w)))
}

/// `P_{μ,λ} = q^{n(μ)-n(λ)} K_{λμ}(q⁻¹)`.
fn criterion_3() -> Check {
    let mut entries = 0;
    for n in 2..=4 {
        let (w, t) = setup(&gl(n))?;
        let (b, g) = green_tables(&w, &t).map_err(|e| e.to_string())?;
        for (i, pi) in b.pairs.iter().enumerate() {
            for (j, pj) in b.pairs.iter().enumerate() {
                let mu = Partition::parse(&pi.orbit).unwrap();
                let lambda = Partition::parse(&pj.orbit).unwrap();
                let k = RatFunc::from_poly(kostka_foulkes(&lambda, &mu)).invert_q();
                let expect = k * RatFunc::q_pow(n_stat(&mu) as i64 - n_stat(&lambda) as i64);
                ensure(g.p[(i, j)] == expect, || format!("GL{n}: P[{mu}][{lambda}] = {}, expected {expect}", g.p[(i, j)]))?;
                entries += 1;
            }
        }
    }
    Ok(format!("{entries} entries for n = 2..4"))
}

/// `⟨Γ_{u_μ}, χ_λ⟩`: integer, 1 at `μ = λ'`, 0 unless `μ ⪯ λ'`, and
/// independent of q.
fn criterion_4() -> Check {
    let mut q_dependent = Vec::new();
    for n in 2..=4 {
        let g = Gggr::new(&gl(n)).map_err(|e| e.to_string())?;
        let m = g.multiplicity_matrix().map_err(|e| format!("GL{n}: {e}"))?;
        for (i, o) in m.orbits.iter().enumerate() {
            let mu = Partition::parse(o).unwrap();
            for (j, c) in m.characters.iter().enumerate() {
                let lt = conj(&Partition::parse(c).unwrap());
                let e = &m.entries[i][j];
                ensure(e.is_integral() && e.has_nonnegative_coeffs(), || format!("GL{n}: entry ({o}, {c}) = {e}"))?;
                if mu == lt {
                    ensure(*e == Poly::one(), || format!("GL{n}: entry ({o}, {c}) = {e}, expected 1"))?;
                }
                if !dominates(&lt, &mu) {
                    ensure(e.is_zero(), || format!("GL{n}: entry ({o}, {c}) = {e}, expected 0"))?;
                }
                if e.degree().unwrap_or(0) > 0 {
                    q_dependent.push(format!("GL{n}[{o},{c}] = {e}"));
                }
            }
        }
    }
    if q_dependent.is_empty() {
        Ok("integral, λ' pattern holds, q-independent".into())
    } else {
        Err(format!(
            "integral and λ' pattern hold, but {} entries depend on q, e.g. {}; these include the u = 1 column required to equal the degrees by criterion 5",
            q_dependent.len(),
            q_dependent[..3.min(q_dependent.len())].join(", ")
        ))
    }
}

/// `q^{n(λ)} [n]! / Π_h [h]`.
fn generic_degree(lambda: &Partition) -> Poly {
    let mut num = Poly::one();
    for k in 1..=lambda.size() {
        num = num * q_int(k);
    }
    let lt = conj(lambda);
    let mut den = Poly::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            den = den * q_int(row - j + lt.part(j) - i - 1);
        }
    }
    num.div_exact(&den).unwrap().shift(n_stat(lambda))
}

fn criterion_5() -> Check {
    for n in 2..=3 {
        let g = Gggr::new(&gl(n)).map_err(|e| e.to_string())?;
        let zero = Partition::new(vec![1; n]).label();
        for lambda in partitions(n) {
            let m = g.multiplicity(&zero, &lambda.label()).map_err(|e| e.to_string())?;
            let d = generic_degree(&lambda);
            ensure(m == d, || format!("GL{n}: <Γ_1, χ_{lambda}> = {m}, degree {d}"))?;
        }
    }
    Ok("GL2, GL3".into())
}

fn criterion_6() -> Check {
    let mut count = 0;
    for n in 1..=5 {
        let d = gl(n);
        for lambda in partitions(n) {
            let lt = conj(&lambda);
            let wf = wave_front(&d, &Series::unipotent(lambda.clone())).map_err(|e| e.to_string())?;
            ensure(wf.partition.as_ref() == Some(&lt), || format!("wave_front({lambda}) = {}", wf.label))?;
            let sup = unipotent_support(&d, &Series::unipotent(lambda.clone())).map_err(|e| e.to_string())?;
            let dual = wave_front(&d, &Series::unipotent(lt)).map_err(|e| e.to_string())?;
            ensure(sup == dual, || format!("support({lambda}) = {}, dual wave front {}", sup.label, dual.label))?;
            count += 1;
        }
    }
    Ok(format!("{count} characters, n <= 5"))
}

fn criterion_7() -> Check {
    let primes = [2u64, 3, 5, 7, 11, 13];
    let report = |d: &RootDatum, p| classify_prime(d, p).map_err(|e| e.to_string());
    let sl2 = datum("SL2")?;
    let pgl2 = datum("PGL2")?;
    let g2 = datum("G2")?;
    for p in primes.iter().copied().chain([17, 19, 23, 29, 31]) {
        ensure(report(&sl2, p)?.proximate, || format!("SL2 not proximate at {p}"))?;
    }
    ensure(!report(&pgl2, 2)?.proximate, || "PGL2 proximate at 2".into())?;
    for &p in &primes[1..] {
        ensure(report(&pgl2, p)?.proximate, || format!("PGL2 not proximate at {p}"))?;
    }
    for n in 1..=4 {
        for &p in &primes {
            ensure(report(&gl(n), p)?.pretty_good, || format!("GL{n} not pretty good at {p}"))?;
        }
    }
    for &p in &primes {
        ensure(report(&g2, p)?.good == !matches!(p, 2 | 3), || format!("G2 goodness wrong at {p}"))?;
    }
    Ok("SL2, PGL2, GL1-GL4, G2 at p <= 13".into())
}

fn criterion_8() -> Check {
    let (c, _) = proximate_cover(&datum("PGL2")?, 2).map_err(|e| e.to_string())?;
    let sl2 = datum("SL2")?;
    let iso = c.find_isomorphism(&sl2).ok_or("cover is not isomorphic to SL2")?;
    ensure(iso.det().abs() == 1, || format!("isomorphism {iso:?} is not unimodular"))?;
    ensure(classify_prime(&c, 2).map_err(|e| e.to_string())?.proximate, || "cover not proximate at 2".into())?;
    Ok("cover ≅ SL2, proximate at 2".into())
}

/// `|C_{GL_n}(u_λ)| = q^{Σ λ'_i² - Σ m_i²} Π |GL_{m_i}(q)|`.
fn gl_centralizer(lambda: &Partition) -> Poly {
    let lt = conj(lambda);
    let mut exp: usize = lt.parts().iter().map(|x| x * x).sum();
    let mut c = Poly::one();
    let mut mult = std::collections::BTreeMap::new();
    for &x in lambda.parts() {
        *mult.entry(x).or_insert(0usize) += 1;
    }
    for &m in mult.values() {
        exp -= m * m;
        c = c * group_order_poly(&WeylGroup::generate(&gl(m)).unwrap()).unwrap();
    }
    c.shift(exp)
}

fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    (1..=n)
        .flat_map(|k| compositions(n - k).into_iter().map(move |mut c| {
            c.insert(0, k);
            c
        }))
        .collect()
}

fn criterion_9() -> Check {
    let mut data: Vec<RootDatum> = ["GL1", "GL2", "GL3", "GL4", "GL5", "SL2", "SL3", "SL4", "PGL3", "SO5", "Sp4", "PSp4", "Spin5", "G2"]
        .iter()
        .map(|n| datum(n))
        .collect::<Result<_, _>>()?;
    data.push(gl(6));
    data.push(simply_connected(Family::F, 4).unwrap());
    data.push(simply_connected(Family::C, 3).unwrap());
    for d in &data {
        for o in orbits_of(d).map_err(|e| format!("{}: {e}", d.name()))? {
            let ws = weight_spaces(d, &o);
            for (&i, &k) in &ws.0 {
                ensure(ws.dim(-i) == k, || format!("{} {}: g({i}) and g({}) differ", d.name(), o.label, -i))?;
            }
            ensure(o.dim_orbit % 2 == 0, || format!("{} {}: odd dimension", d.name(), o.label))?;
            ensure(o.dim_orbit + o.dim_centralizer == d.dim_group(), || format!("{} {}", d.name(), o.label))?;
        }
    }
    for n in 1..=6 {
        for o in orbits_of(&gl(n)).unwrap() {
            let lt = conj(o.partition.as_ref().unwrap());
            let expect = n * n - lt.parts().iter().map(|x| x * x).sum::<usize>();
            ensure(o.dim_orbit == expect, || format!("GL{n} {}: dim {}", o.label, o.dim_orbit))?;
        }
    }
    for n in 1..=5 {
        let g = group_order_poly(&WeylGroup::generate(&gl(n)).unwrap()).unwrap();
        let total = partitions(n).iter().fold(Poly::zero(), |s, l| s + g.div_exact(&gl_centralizer(l)).unwrap());
        ensure(total == Poly::monomial(rat(1), n * (n - 1)), || format!("GL{n}: Σ|O| = {total}"))?;
    }
    let mut induced = 0;
    for n in 1..=5 {
        let d = gl(n);
        for comp in compositions(n) {
            let mut nodes = Vec::new();
            let mut start = 0;
            for &b in &comp {
                nodes.extend(start..start + b - 1);
                start += b;
            }
            let mut tuples: Vec<Vec<Partition>> = vec![vec![]];
            for &b in &comp {
                tuples = tuples.into_iter().flat_map(|t| partitions(b).into_iter().map(move |p| [t.clone(), vec![p]].concat())).collect();
            }
            for t in tuples {
                let o = induced_orbit(&d, &nodes, &t).map_err(|e| e.to_string())?;
                let dim_l: usize = comp.iter().map(|b| b * b).sum();
                let dim_ol: usize = t.iter().map(|p| p.size() * p.size() - conj(p).parts().iter().map(|x| x * x).sum::<usize>()).sum();
                ensure(o.dim_orbit == n * n - dim_l + dim_ol, || format!("GL{n} Ind {t:?}"))?;
                induced += 1;
            }
        }
    }
    Ok(format!("{} data, Steinberg count n <= 5, {induced} induced orbits", data.len()))
}

fn cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut parts = Vec::new();
    for s in 0..perm.len() {
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len > 0 {
            parts.push(len);
        }
    }
    Partition::new(parts)
}

fn perm_sign(perm: &[usize]) -> i64 {
    let c = cycle_type(perm);
    if (perm.len() - c.len()) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `Ind_{S_λ}^{S_n}(sgn)` by counting, decomposed with the table, then
/// truncated to `b = Σ C(λ_i, 2)`.
fn brute_j_sign(w: &WeylGroup, t: &CharTable, lambda: &Partition) -> Vec<(usize, Rational)> {
    let n = lambda.size();
    let perms = permutations(n);
    let mut block = vec![0usize; n];
    let mut s = 0;
    for (b, &len) in lambda.parts().iter().enumerate() {
        block[s..s + len].fill(b);
        s += len;
    }
    let in_h = |p: &[usize]| (0..n).all(|i| block[p[i]] == block[i]);
    let h_order = perms.iter().filter(|p| in_h(p)).count() as i64;
    let class_of_type = |c: &Partition| (0..w.num_classes()).find(|&k| cycle_type(w.permutation(w.class_rep(k)).unwrap()) == *c).unwrap();
    let mut values = vec![rat(0); w.num_classes()];
    for k in 0..w.num_classes() {
        let g = w.permutation(w.class_rep(k)).unwrap();
        let mut sum = 0i64;
        for x in &perms {
            let mut inv = vec![0; n];
            for (i, &xi) in x.iter().enumerate() {
                inv[xi] = i;
            }
            let conj: Vec<usize> = (0..n).map(|i| x[g[inv[i]]]).collect();
            if in_h(&conj) {
                sum += perm_sign(&conj);
            }
        }
        values[class_of_type(&cycle_type(g))] = rat(sum) / rat(h_order);
    }
    let b_target: usize = lambda.parts().iter().map(|&x| x * (x - 1) / 2).sum();
    let parts = t.partitions.as_ref().unwrap();
    t.decompose(&values)
        .into_iter()
        .enumerate()
        .filter(|(i, m)| *m != rat(0) && n_stat(&parts[*i]) == b_target)
        .collect()
}

fn criterion_10() -> Check {
    let mut groups = 0;
    for name in ["SL2", "SL3", "SL4", "SL5", "SO5", "G2"] {
        let (w, t) = setup(&datum(name)?)?;
        let order = t.group_order as i64;
        for i in 0..t.len() {
            for j in 0..t.len() {
                let s: i64 = (0..w.num_classes()).map(|c| t.class_sizes[c] as i64 * t.values[i][c] * t.values[j][c]).sum();
                ensure(s == if i == j { order } else { 0 }, || format!("{name}: rows {i}, {j}"))?;
            }
        }
        for a in 0..w.num_classes() {
            for b in 0..w.num_classes() {
                let s: i64 = (0..t.len()).map(|i| t.values[i][a] * t.values[i][b]).sum();
                let expect = if a == b { order / t.class_sizes[a] as i64 } else { 0 };
                ensure(s == expect, || format!("{name}: columns {a}, {b}"))?;
            }
        }
        let b = fake_degrees(&w, &t).map_err(|e| e.to_string())?;
        let sign = (0..t.len())
            .find(|&i| (0..w.num_classes()).all(|c| t.values[i][c] == w.sign(w.class_rep(c))))
            .ok_or("no sign character")?;
        ensure(b.b(&t.labels[t.trivial()]) == Some(0), || format!("{name}: b(trivial)"))?;
        ensure(b.b(&t.labels[sign]) == Some(w.datum().num_positive_roots()), || format!("{name}: b(sign)"))?;
        groups += 1;
    }
    let mut checked = 0;
    for n in 1..=5 {
        let (w, t) = setup(&gl(n))?;
        for lambda in partitions(n) {
            let h = ReflectionSubgroup::young(&w, &lambda).map_err(|e| e.to_string())?;
            let j = j_induction(&w, &t, &h, &h.sign_values(&w)).map_err(|e| e.to_string())?;
            let brute = brute_j_sign(&w, &t, &lambda);
            let target = t.index_of(&conj(&lambda).label()).unwrap();
            ensure(brute == vec![(target, rat(1))], || format!("S_{lambda}: brute force gives {brute:?}"))?;
            ensure(j == target, || format!("S_{lambda}: j-induction gives {}", t.labels[j]))?;
            checked += 1;
        }
    }
    Ok(format!("{groups} groups, {checked} Young subgroups"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("GL2 golden tables", criterion_1),
        ("Lusztig identity and order independence", criterion_2),
        ("Green polynomials vs Kostka-Foulkes", criterion_3),
        ("multiplicity matrix", criterion_4),
        ("regular representation column", criterion_5),
        ("wave-front duality", criterion_6),
        ("prime classification", criterion_7),
        ("proximate cover of PGL2", criterion_8),
        ("orbit invariants", criterion_9),
        ("Weyl group suite", criterion_10),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let r = f();
        let secs = start.elapsed().as_secs_f64();
        match r {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({detail}) [{secs:.2}s]", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} [{secs:.2}s]", k + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
