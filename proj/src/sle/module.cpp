#include "slevir/sle/module.hpp"

#include "slevir/sle/linear_algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace slevir {

std::vector<OperatorWord> pbw_words(int level) {
    std::vector<OperatorWord> out;
    OperatorWord cur;
    std::function<void(int, int)> rec = [&](int left, int max_part) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(left, max_part); p >= 1; --p) {
            cur.push_back(-p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(level, level);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<size_t> ModuleBasis::graded_dimensions() const {
    std::vector<size_t> d;
    for (const auto& l : levels) d.push_back(l.dimension());
    return d;
}

namespace {

// Memoised word images; a word acts by its leftmost letter on the image of the rest.
class WordImages {
public:
    WordImages(const WeightAssignment& w, Element g) : w_(w) { cache_[{}] = std::move(g); }
    const Element& operator()(const OperatorWord& word) {
        auto it = cache_.find(word);
        if (it != cache_.end()) return it->second;
        OperatorWord rest(word.begin() + 1, word.end());
        Element r = apply_L_general(word.front(), w_, (*this)(rest));
        return cache_.emplace(word, std::move(r)).first->second;
    }

private:
    WeightAssignment w_;
    std::map<OperatorWord, Element> cache_;
};

} // namespace

ModuleBasis build_module_from(const SleVariant& v, const Element& generator, int max_level, bool check_drift) {
    if (max_level > Var::kMaxDepth) throw DepthError("module level beyond f-depth");
    ModuleBasis mb;
    mb.generator = generator;
    WordImages img(v.weights(), generator);
    bool ok = true;
    for (int level = 0; level <= max_level; ++level) {
        ModuleLevel ml;
        ml.level = level;
        ml.all_words = pbw_words(level);
        Echelon ech;
        std::vector<Element> images;
        for (const auto& w : ml.all_words) images.push_back(img(w));
        auto coords = element_coordinates(images);
        for (size_t i = 0; i < images.size(); ++i) {
            if (ech.insert(coords[i], i)) continue;
            ml.words.push_back(ml.all_words[i]);
            ml.elements.push_back(images[i]);
        }
        if (check_drift)
            for (const auto& e : ml.elements)
                for (int I = 1; I <= v.N; ++I) ok = ok && apply_A(v, I, e).is_zero();
        mb.levels.push_back(std::move(ml));
    }
    mb.annihilated = check_drift && ok;
    return mb;
}

ModuleBasis build_module(const SleVariant& v, int max_level, bool check_drift) {
    return build_module_from(v, v.Z, max_level, check_drift);
}

SingularNullReport find_singular_null(const std::function<SleVariant(const ScalarK&)>& rebuild, int level,
                                      std::optional<Rational> kappa0) {
    SingularNullReport rep;
    rep.level = level;
    rep.kappa = kappa0 ? ScalarK(*kappa0).to_string() : "generic";
    auto words = pbw_words(level);
    rep.words = words.size();

    auto images_at = [&](const SleVariant& v) {
        WordImages img(v.weights(), v.Z);
        std::vector<Element> out;
        for (const auto& w : words) out.push_back(img(w));
        return out;
    };
    SleVariant generic = rebuild(ScalarK::kappa());
    rep.generic_dimension = rank(element_coordinates(images_at(generic)));

    SleVariant v = kappa0 ? rebuild(ScalarK(*kappa0)) : generic;
    std::vector<Element> images = images_at(v);
    for (size_t i = 0; i < words.size(); ++i)
        if (images[i].is_zero()) rep.zero_words.push_back(words[i]);
    auto coords = element_coordinates(images);
    rep.dimension = rank(coords);
    for (const auto& k : kernel(coords)) {
        NullVector nv;
        for (size_t i = 0; i < k.size(); ++i)
            if (!k[i].is_zero()) nv.combination.emplace_back(words[i], k[i]);
        rep.null_vectors.push_back(std::move(nv));
    }

    // Singular vectors: combinations of independent images killed by L_1 and L_2.
    Echelon ech;
    std::vector<Element> basis;
    for (size_t i = 0; i < images.size(); ++i)
        if (!ech.insert(coords[i], i)) basis.push_back(images[i]);
    WeightAssignment w = v.weights();
    std::vector<std::vector<Element>> raised;
    for (const auto& e : basis) raised.push_back({apply_L_general(1, w, e), apply_L_general(2, w, e)});
    for (const auto& k : kernel(element_coordinates(raised))) {
        Element s;
        for (size_t i = 0; i < k.size(); ++i)
            if (!k[i].is_zero()) s += basis[i].scaled(k[i]);
        if (!s.is_zero()) rep.singular_vectors.push_back(s);
    }
    return rep;
}

MobiusReport mobius_covariance_check(const SleVariant& v) {
    WeightAssignment w = v.weights();
    MobiusReport r;
    for (Var p : v.chamber.order()) {
        Element d = v.Z.derivative(p);
        Element pv = Element::var(p);
        ScalarK delta = w.delta.at(p);
        r.translation += d;
        r.dilatation += pv * d + v.Z.scaled(delta);
        r.special_conformal += pv * pv * d + (pv * v.Z).scaled(delta * Rational(2));
    }
    return r;
}

} // namespace slevir
