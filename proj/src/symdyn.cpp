#include "topdyn/symdyn.hpp"

#include <algorithm>

namespace topdyn::symdyn {

void validate_word(const std::string& word, unsigned alphabet) {
    if (word.empty()) throw BadParams("word must be nonempty");
    if (alphabet < 2 || alphabet > 10) throw BadParams("alphabet size must be in 2..10");
    for (char c : word)
        if (c < '0' || c >= static_cast<char>('0' + alphabet))
            throw BadParams("word symbol out of alphabet: " + word);
}

Cylinder cylinder(std::string word, std::int64_t offset, unsigned alphabet) {
    validate_word(word, alphabet);
    return Cylinder{std::move(word), offset};
}

Cylinder parse_cylinder(const std::string& text, unsigned alphabet) {
    auto at = text.find('@');
    if (at == std::string::npos) return cylinder(text, 0, alphabet);
    std::string word = text.substr(0, at);
    std::string off = text.substr(at + 1);
    try {
        return cylinder(word, std::stoll(off), alphabet);
    } catch (const std::invalid_argument&) {
        throw BadParams("bad cylinder offset: " + text);
    } catch (const std::out_of_range&) {
        throw BadParams("bad cylinder offset: " + text);
    }
}

ComputablePoint ComputablePoint::all_zeros() {
    ComputablePoint p;
    p.tag_ = Tag::AllZeros;
    return p;
}

ComputablePoint ComputablePoint::periodic(std::string word, unsigned alphabet) {
    validate_word(word, alphabet);
    ComputablePoint p;
    p.tag_ = Tag::Periodic;
    p.alphabet_ = alphabet;
    p.word_ = std::move(word);
    return p;
}

ComputablePoint ComputablePoint::all_words_concat(unsigned alphabet) {
    if (alphabet < 2 || alphabet > 10) throw BadParams("alphabet size must be in 2..10");
    ComputablePoint p;
    p.tag_ = Tag::AllWords;
    p.alphabet_ = alphabet;
    return p;
}

ComputablePoint ComputablePoint::shift_of(ComputablePoint base, std::int64_t k) {
    ComputablePoint p;
    p.tag_ = Tag::Shifted;
    p.alphabet_ = base.alphabet_;
    p.shift_ = k;
    p.base_ = std::make_shared<const ComputablePoint>(std::move(base));
    return p;
}

static int all_words_coordinate(unsigned k, std::int64_t n) {
    if (n < 0) return 0;
    // Words of length m contribute m·k^m symbols; find the block containing n.
    std::uint64_t rest = static_cast<std::uint64_t>(n);
    std::uint64_t count = k;  // k^m
    for (std::uint64_t m = 1;; ++m) {
        const std::uint64_t block = m * count;
        if (rest < block) {
            const std::uint64_t word_index = rest / m;
            const std::uint64_t pos = rest % m;
            // pos-th symbol (most significant first) of word_index in base k,
            // padded to width m
            std::uint64_t div = 1;
            for (std::uint64_t i = 0; i + 1 + pos < m; ++i) div *= k;
            return static_cast<int>((word_index / div) % k);
        }
        rest -= block;
        count *= k;
    }
}

int ComputablePoint::coordinate(std::int64_t n) const {
    switch (tag_) {
        case Tag::AllZeros: return 0;
        case Tag::Periodic: {
            const auto len = static_cast<std::int64_t>(word_.size());
            std::int64_t r = n % len;
            if (r < 0) r += len;
            return word_[static_cast<std::size_t>(r)] - '0';
        }
        case Tag::AllWords: return all_words_coordinate(alphabet_, n);
        case Tag::Shifted: return base_->coordinate(n + shift_);
    }
    return 0;
}

std::optional<std::int64_t> ComputablePoint::left_zero_bound() const {
    switch (tag_) {
        case Tag::AllZeros: return 0;
        case Tag::Periodic:
            if (word_.find_first_not_of('0') == std::string::npos) return 0;
            return std::nullopt;
        case Tag::AllWords: return 0;
        case Tag::Shifted: {
            auto b = base_->left_zero_bound();
            if (!b) return std::nullopt;
            return *b - shift_;
        }
    }
    return std::nullopt;
}

bool ComputablePoint::is_zero_point() const {
    switch (tag_) {
        case Tag::AllZeros: return true;
        case Tag::Periodic: return word_.find_first_not_of('0') == std::string::npos;
        case Tag::AllWords: return false;
        case Tag::Shifted: return base_->is_zero_point();
    }
    return false;
}

std::string ComputablePoint::describe() const {
    switch (tag_) {
        case Tag::AllZeros: return "all-zeros";
        case Tag::Periodic: return "periodic(" + word_ + ")";
        case Tag::AllWords: return "all-words-concat(k=" + std::to_string(alphabet_) + ")";
        case Tag::Shifted:
            return "shift^" + std::to_string(shift_) + "(" + base_->describe() + ")";
    }
    return "?";
}

int shift_coordinate(const ComputablePoint& p, std::int64_t n) { return p.coordinate(n); }

bool ZSetDescription::contains(std::int64_t n) const {
    if (n < lo) return below_member;
    if (n > hi) return above_member;
    return window[static_cast<std::size_t>(n - lo)];
}

bool ZSetDescription::is_cofinite() const { return below_member && above_member; }

std::vector<std::int64_t> ZSetDescription::nonmembers() const {
    if (!is_cofinite()) throw Error("nonmembers() requires a cofinite set");
    std::vector<std::int64_t> out;
    for (std::int64_t n = lo; n <= hi; ++n)
        if (!window[static_cast<std::size_t>(n - lo)]) out.push_back(n);
    return out;
}

bool ZSetDescription::nplus_infinite() const {
    if (above_member) return true;
    // otherwise members ≥ 0 all lie inside the window, hence finitely many
    return false;
}

std::string ZSetDescription::to_string() const {
    if (is_cofinite()) {
        auto ex = nonmembers();
        if (ex.empty()) return "Z";
        std::string s = "Z minus {";
        for (std::size_t i = 0; i < ex.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(ex[i]);
        }
        return s + "}";
    }
    std::string s = "window[" + std::to_string(lo) + ".." + std::to_string(hi) + "]=";
    for (bool b : window) s += b ? '1' : '0';
    s += " below=" + std::string(below_member ? "in" : "out");
    s += " above=" + std::string(above_member ? "in" : "out");
    return s;
}

ZSetDescription cylinder_hitting(const Cylinder& u, const Cylinder& v) {
    validate_word(u.word);
    validate_word(v.word);
    const std::int64_t lu = static_cast<std::int64_t>(u.word.size());
    const std::int64_t lv = static_cast<std::int64_t>(v.word.size());
    ZSetDescription out;
    // supports overlap iff u.off - v.off - |v| < n < u.off + |u| - v.off
    out.lo = u.offset - v.offset - lv + 1;
    out.hi = u.offset + lu - v.offset - 1;
    out.below_member = true;
    out.above_member = true;
    for (std::int64_t n = out.lo; n <= out.hi; ++n) {
        bool compatible = true;
        const std::int64_t vstart = v.offset + n;
        const std::int64_t from = std::max(u.offset, vstart);
        const std::int64_t to = std::min(u.offset + lu, vstart + lv);
        for (std::int64_t p = from; p < to; ++p)
            if (u.word[static_cast<std::size_t>(p - u.offset)] !=
                v.word[static_cast<std::size_t>(p - vstart)]) {
                compatible = false;
                break;
            }
        out.window.push_back(compatible);
    }
    return out;
}

static std::vector<std::string> words_up_to(unsigned maxlen) {
    std::vector<std::string> out;
    for (unsigned len = 1; len <= maxlen; ++len)
        for (std::uint64_t w = 0; w < (std::uint64_t{1} << len); ++w) {
            std::string s(len, '0');
            for (unsigned i = 0; i < len; ++i)
                if ((w >> (len - 1 - i)) & 1) s[i] = '1';
            out.push_back(s);
        }
    return out;
}

CofiniteReport verify_cofinite(unsigned maxlen) {
    if (maxlen < 1) throw BadParams("maxlen must be at least 1");
    CofiniteReport rep;
    auto words = words_up_to(maxlen);
    for (const auto& uw : words)
        for (const auto& vw : words) {
            ZSetDescription z = cylinder_hitting(cylinder(uw), cylinder(vw));
            ++rep.pairs_checked;
            if (!z.is_cofinite()) {
                rep.all_within_bound = false;
                continue;
            }
            const std::size_t ex = z.nonmembers().size();
            rep.max_exceptional = std::max(rep.max_exceptional, ex);
            if (ex > uw.size() + vw.size() - 1) rep.all_within_bound = false;
            if (!z.nplus_infinite()) rep.all_nplus_infinite = false;
        }
    return rep;
}

static bool all_factors_up_to(const std::string& w, unsigned maxlen) {
    for (unsigned len = 1; len <= maxlen; ++len) {
        if (w.size() < len) return false;
        std::vector<bool> present(std::size_t{1} << len, false);
        std::uint64_t val = 0;
        const std::uint64_t mask = (std::uint64_t{1} << len) - 1;
        for (std::size_t i = 0; i < w.size(); ++i) {
            val = ((val << 1) | static_cast<std::uint64_t>(w[i] - '0')) & mask;
            if (i + 1 >= len) present[val] = true;
        }
        for (bool p : present)
            if (!p) return false;
    }
    return true;
}

PrefixResult transitive_prefix(unsigned maxlen) {
    if (maxlen < 1) throw BadParams("maxlen must be at least 1");
    if (maxlen > 24) throw BoundExceeded("transitive_prefix is limited to length 24");
    PrefixResult r;
    for (const auto& w : words_up_to(maxlen)) r.word += w;
    r.expected_length = 0;
    for (unsigned len = 1; len <= maxlen; ++len)
        r.expected_length += std::uint64_t{len} * (std::uint64_t{1} << len);
    r.all_factors_present = all_factors_up_to(r.word, maxlen);
    return r;
}

Trans0Certificate trans0_point(unsigned level) {
    if (level < 1) throw BadParams("certificate level must be at least 1");
    Trans0Certificate cert;
    cert.point = ComputablePoint::all_words_concat(2);
    cert.level = level;

    PrefixResult prefix = transitive_prefix(level);
    const std::int64_t len = static_cast<std::int64_t>(prefix.word.size());

    // read the nonnegative coordinates back out of the point itself
    std::string readout;
    for (std::int64_t n = 0; n < len; ++n)
        readout += static_cast<char>('0' + cert.point.coordinate(n));
    cert.factors_certified = all_factors_up_to(readout, level);

    cert.left_window = len + 16;
    cert.left_tail_zero = cert.point.left_zero_bound().value_or(1) <= 0;
    for (std::int64_t n = -cert.left_window; n < 0; ++n)
        if (cert.point.coordinate(n) != 0) cert.left_tail_zero = false;
    return cert;
}

PeriodicDensityReport periodic_density_check(unsigned maxlen) {
    if (maxlen < 1) throw BadParams("maxlen must be at least 1");
    PeriodicDensityReport rep;
    rep.all_contained = true;
    rep.all_realized = true;

    for (const auto& w : words_up_to(maxlen)) {
        ComputablePoint p = ComputablePoint::periodic(w);
        ++rep.cylinders_checked;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (p.coordinate(static_cast<std::int64_t>(i)) != w[i] - '0')
                rep.all_contained = false;
    }

    // property transfer to the periodic-point subsystem: every window member
    // of every hitting set is realized inside the subsystem
    const unsigned wit_len = std::min(maxlen, 4u);
    auto words = words_up_to(wit_len);
    for (const auto& uw : words)
        for (const auto& vw : words) {
            Cylinder u = cylinder(uw), v = cylinder(vw);
            ZSetDescription z = cylinder_hitting(u, v);
            const std::int64_t probe_hi =
                std::max<std::int64_t>(z.hi, 0) + static_cast<std::int64_t>(uw.size() + vw.size());
            for (std::int64_t n = 0; n <= probe_hi; ++n) {
                if (!z.contains(n)) continue;
                ++rep.witnesses_checked;
                // periodic word over the combined support, zeros elsewhere
                const std::int64_t span =
                    std::max<std::int64_t>(static_cast<std::int64_t>(uw.size()),
                                           n + static_cast<std::int64_t>(vw.size()));
                std::string word(static_cast<std::size_t>(span), '0');
                for (std::size_t i = 0; i < uw.size(); ++i) word[i] = uw[i];
                for (std::size_t i = 0; i < vw.size(); ++i)
                    word[static_cast<std::size_t>(n) + i] = vw[i];
                ComputablePoint p = ComputablePoint::periodic(word);
                bool ok = true;
                for (std::size_t i = 0; i < uw.size(); ++i)
                    if (p.coordinate(static_cast<std::int64_t>(i)) != uw[i] - '0') ok = false;
                for (std::size_t i = 0; i < vw.size(); ++i)
                    if (p.coordinate(n + static_cast<std::int64_t>(i)) != vw[i] - '0') ok = false;
                if (!ok) rep.all_realized = false;
            }
        }
    return rep;
}

std::string Dyadic::to_string() const {
    if (zero) return "0";
    if (exponent >= 0) return std::to_string(std::int64_t{1} << std::min<std::int64_t>(exponent, 62));
    return "2^" + std::to_string(exponent);
}

BackwardDistance backward_distance_to_zero(const ComputablePoint& p, std::int64_t steps,
                                           std::int64_t radius) {
    if (radius < 0) throw BadParams("radius must be nonnegative");
    auto bound = p.left_zero_bound();
    if (!bound) throw TailNotComputable("point has no computable all-zero left tail");

    BackwardDistance out;
    out.steps = steps;
    out.radius = radius;
    out.tail_bound = Dyadic::pow2(-(radius + 1));

    // s^{-k}(p)_n = p(n - k); maximize 2^{-|n|} over nonzero coordinates
    auto coord = [&](std::int64_t n) { return p.coordinate(n - steps); };

    out.window_max = Dyadic::zero_value();
    for (std::int64_t a = 0; a <= radius; ++a) {
        if (coord(a) != 0 || (a > 0 && coord(-a) != 0)) {
            out.window_max = Dyadic::pow2(-a);
            break;
        }
    }

    if (p.is_zero_point()) {
        out.exact = Dyadic::zero_value();
        return out;
    }
    // nonzero coordinates of s^{-k}p lie in [bound + k, ∞); scan outward
    const std::int64_t first_possible = *bound + steps;
    std::int64_t limit = std::max<std::int64_t>(radius, std::max<std::int64_t>(first_possible, 0)) +
                         (1 << 20);
    for (std::int64_t a = 0; a <= limit; ++a) {
        if (coord(a) != 0 || (a > 0 && coord(-a) != 0)) {
            out.exact = Dyadic::pow2(-a);
            return out;
        }
    }
    throw TailNotComputable("no nonzero coordinate found within the scan limit");
}

}  // namespace topdyn::symdyn
