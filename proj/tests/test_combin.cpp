#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "looph/combin.hpp"

using namespace looph;

namespace {
std::vector<int> perm_of_word(const std::vector<int>& word, int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    for (int s : word) std::swap(p[s - 1], p[s]);
    return p;
}

int inversions(const std::vector<int>& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv;
}

bool avoids_321(const std::vector<int>& p) {
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            for (size_t k = j + 1; k < p.size(); ++k)
                if (p[i] > p[j] && p[j] > p[k]) return false;
    return true;
}
}  // namespace

TEST_CASE("dyck path enumeration") {
    auto d2 = dyck_paths(2);
    REQUIRE(d2.size() == 2);
    std::set<std::string> s2;
    for (const auto& p : d2) s2.insert(p.str());
    CHECK(s2 == std::set<std::string>{"uurr", "urur"});
    CHECK(dyck_paths(3).size() == 5);
    CHECK(dyck_paths(10).size() == 16796);
    CHECK_NOTHROW(DyckPath::parse("uuurrruruuruuururrrr"));
    CHECK_THROWS_AS(DyckPath::parse("rurr"), std::invalid_argument);
    CHECK_THROWS_AS(dyck_paths(15), std::out_of_range);
}

TEST_CASE("mdd on small paths") {
    CHECK(mdd(DyckPath::parse("urur")).empty());
    auto f = mdd(DyckPath::parse("uurr"));
    REQUIRE(f.size() == 1);
    CHECK(f[0] == MddFactor{1});
}

TEST_CASE("mdd golden value") {
    auto f = mdd(DyckPath::parse("uuurrruruuruuururrrr"));
    std::vector<MddFactor> expect = {{1}, {2}, {7, 6, 5}, {8, 7}, {9, 8}};
    CHECK(f == expect);
}

TEST_CASE("mdd support law and permutation properties") {
    for (int n = 1; n <= 8; ++n) {
        std::set<std::vector<int>> images;
        for (const auto& p : dyck_paths(n)) {
            auto word = mdd_word(p);
            std::set<int> support(word.begin(), word.end());
            for (int i = 1; i < n; ++i) CHECK(support.count(i) == !p.touches(i));
            if (n <= 7) {  // permutation oracle
                auto perm = perm_of_word(word, n);
                CHECK(inversions(perm) == static_cast<int>(word.size()));  // reduced
                CHECK(avoids_321(perm));
                CHECK(images.insert(perm).second);  // injective
            }
        }
        if (n <= 7) CHECK(images.size() == catalan(n));
    }
}

TEST_CASE("mdd inverse") {
    CHECK(mdd_inverse({}, 3).str() == "ururur");
    CHECK(mdd_inverse({1}, 2).str() == "uurr");
    CHECK_THROWS_AS(mdd_inverse({1, 1}, 3), std::invalid_argument);
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : dyck_paths(n)) CHECK(mdd_inverse(mdd_word(p), n) == p);
}

TEST_CASE("tilde pairs") {
    auto t2 = tilde_dyck(2);
    REQUIRE(t2.size() == 3);
    std::set<std::pair<std::string, std::string>> got;
    for (const auto& [p, q] : t2) got.emplace(p.str(), q.str());
    std::set<std::pair<std::string, std::string>> expect = {
        {"uurr", "urur"}, {"urur", "uurr"}, {"urur", "urur"}};
    CHECK(got == expect);
    CHECK(tilde_dyck(3).size() == 10);
    CHECK(tilde_dyck(5).size() == 126);
    CHECK(mpz_class(tilde_dyck(5).size()) == binomial(10, 5) / 2);
}

TEST_CASE("phi examples") {
    DyckPath urur = DyckPath::parse("urur"), uurr = DyckPath::parse("uurr");
    CHECK(phi(urur, urur).str() == "rur");
    CHECK(phi(urur, uurr).str() == "rru");
    CHECK(phi(uurr, urur).str() == "urr");
    CHECK_THROWS_AS(phi(uurr, uurr), std::invalid_argument);  // pair not in tilde-Dyck

    // a seven-strand pair; the partner path is written in its reflected
    // below-diagonal encoding, transposed here to the common one
    DyckPath P = DyckPath::parse("uruurruruurrur");
    DyckPath Q = DyckPath::parse("ururuurrururur");
    LatticePath L = phi(P, Q);
    CHECK(L.str() == "ruurrruuurrur");
    auto [P2, Q2] = phi_inverse(L);
    CHECK(P2 == P);
    CHECK(Q2 == Q);
}

TEST_CASE("phi is a bijection onto Path(n,n-1)") {
    for (int n = 1; n <= 6; ++n) {
        auto pairs = tilde_dyck(n);
        auto all = lattice_paths(n);
        REQUIRE(pairs.size() == all.size());
        std::set<LatticePath> image;
        for (const auto& [p, q] : pairs) {
            LatticePath L = phi(p, q);
            CHECK(image.insert(L).second);
            auto [p2, q2] = phi_inverse(L);
            CHECK(p2 == p);
            CHECK(q2 == q);
        }
        for (const auto& L : all) {
            auto [p, q] = phi_inverse(L);
            CHECK(phi(p, q) == L);
        }
    }
}

TEST_CASE("counting helpers") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(4) == 14);
    CHECK(catalan(10) == 16796);
    CHECK(binomial(15, 8) == 6435);
    CHECK(binomial(3, 5) == 0);
}
