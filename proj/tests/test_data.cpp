#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <string>

#include "helpers.hpp"
#include "kacim/data.hpp"
#include "kacim/rng.hpp"

using namespace kacim;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("/tmp/kacim_test_" + name) {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("load_matrix_csv parses a plain numeric table") {
    TempFile f("plain.csv", "1.0,2.0\n3.5,-4\n0,1e3\n");
    const Matrix m = load_matrix_csv(f.path);
    CHECK(m.rows() == 3);
    CHECK(m.cols() == 2);
    CHECK(m(1, 0) == doctest::Approx(3.5));
    CHECK(m(2, 1) == doctest::Approx(1000.0));
}

TEST_CASE("load_labeled_csv encodes labels by first appearance") {
    TempFile f("labeled.csv", "f0,f1,label\n1,2,a\n3,4,b\n5,6,a\n");
    const LabeledDataset d = load_labeled_csv(f.path, "label");
    CHECK(d.n() == 3);
    CHECK(d.dx() == 2);
    CHECK(d.n_classes == 2);
    CHECK(d.labels == std::vector<int>{0, 1, 0});
}

TEST_CASE("load_labeled_csv reports row arity errors with the row index") {
    TempFile f("ragged.csv", "a,b,label\n1,2,x\n3,x\n");
    try {
        load_labeled_csv(f.path, "label");
        FAIL("expected an arity error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("row") != std::string::npos);
    }
}

TEST_CASE("standardize centers and scales with the population convention") {
    Matrix m(3, 1);
    m << 1, 2, 3;
    const auto [s, stats] = standardize(m);
    CHECK(stats.mean[0] == doctest::Approx(2.0));
    // population std of {1,2,3} is sqrt(2/3)
    CHECK(stats.std[0] == doctest::Approx(std::sqrt(2.0 / 3.0)));
    CHECK(s.col(0).mean() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(s.col(0).squaredNorm() / 3.0 == doctest::Approx(1.0));
    CHECK_FALSE(stats.degenerate[0]);
}

TEST_CASE("standardize flags constant columns and maps them to zero") {
    Matrix m(3, 1);
    m << 5, 5, 5;
    const auto [s, stats] = standardize(m);
    CHECK(stats.degenerate[0]);
    CHECK(s.col(0).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
}

TEST_CASE("standardize is idempotent on non-degenerate data") {
    Rng rng(42);
    const Matrix m = kacim::testing::random_matrix(rng, 40, 3);
    const auto [once, st1] = standardize(m);
    const auto [twice, st2] = standardize(once);
    CHECK((twice - once).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("split produces the documented sizes at n=100") {
    LabeledDataset d;
    d.x = Matrix::Zero(100, 2);
    d.labels.assign(100, 0);
    d.n_classes = 2;
    SplitSpec s;
    s.seed = 7;
    const auto [train, val, test] = split(d, s);
    CHECK(train.n() == 48);
    CHECK(val.n() == 12);
    CHECK(test.n() == 40);
}

TEST_CASE("split_indices is deterministic per seed") {
    SplitSpec s{0.5, 0.2, 0.3, 99};
    const auto a = split_indices(10, s);
    const auto b = split_indices(10, s);
    CHECK(std::get<0>(a) == std::get<0>(b));
    CHECK(std::get<1>(a) == std::get<1>(b));
    CHECK(std::get<2>(a) == std::get<2>(b));
}

TEST_CASE("split rejects samples too small for three parts") {
    SplitSpec s{0.5, 0.2, 0.3, 1};
    CHECK_THROWS_AS(split_indices(2, s), std::invalid_argument);
}

TEST_CASE("split parts partition the index set for many seeds and sizes") {
    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 10 + static_cast<int>(rng.below(400));
        SplitSpec s;
        s.seed = rng.next_u64();
        const auto [tr, va, te] = split_indices(n, s);
        std::set<int> all;
        for (int i : tr) all.insert(i);
        for (int i : va) all.insert(i);
        for (int i : te) all.insert(i);
        CHECK(all.size() == tr.size() + va.size() + te.size());  // disjoint
        CHECK(static_cast<int>(all.size()) == n);                // exhaustive
        CHECK(*all.begin() == 0);
        CHECK(*all.rbegin() == n - 1);
    }
}

TEST_CASE("one_hot encodes as documented") {
    const Matrix m = one_hot({0, 2, 1}, 3);
    Matrix expected(3, 3);
    expected << 1, 0, 0, 0, 0, 1, 0, 1, 0;
    CHECK((m - expected).cwiseAbs().maxCoeff() == 0.0);

    const Matrix both = one_hot({1, 1}, 2);
    CHECK(both(0, 1) == 1.0);
    CHECK(both(1, 1) == 1.0);
    CHECK(both.col(0).cwiseAbs().maxCoeff() == 0.0);

    CHECK_THROWS_AS(one_hot({0}, 1), std::invalid_argument);
}

TEST_CASE("one_hot rows contain exactly one unit entry") {
    Rng rng(3);
    std::vector<int> labels;
    for (int i = 0; i < 50; ++i) labels.push_back(static_cast<int>(rng.below(4)));
    const Matrix m = one_hot(labels, 4);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        CHECK(m.row(r).sum() == 1.0);
        CHECK(m.row(r).maxCoeff() == 1.0);
        CHECK(m.row(r).minCoeff() == 0.0);
    }
}

TEST_CASE("matrix CSV write/read round trip") {
    Rng rng(11);
    const Matrix m = kacim::testing::random_matrix(rng, 7, 3);
    TempFile f("roundtrip.csv", "");
    write_matrix_csv(f.path, m);
    const Matrix back = load_matrix_csv(f.path);
    CHECK((back - m).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("PairedSample rejects mismatched row counts") {
    CHECK_THROWS_AS(PairedSample(Matrix::Zero(3, 2), Matrix::Zero(4, 2)), std::invalid_argument);
}
