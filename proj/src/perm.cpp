#include "paramconn/perm.hpp"

#include "paramconn/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pconn {

Perm::Perm(std::size_t n) : images_(n) {
    std::iota(images_.begin(), images_.end(), 1);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v) - 1])
            throw ValidationError("Perm: images are not a bijection");
        seen[static_cast<std::size_t>(v) - 1] = true;
    }
}

Perm Perm::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        inv[static_cast<std::size_t>(images_[i]) - 1] = static_cast<int>(i) + 1;
    return Perm(std::move(inv));
}

Perm Perm::operator*(const Perm& rhs) const {
    if (size() != rhs.size())
        throw ValidationError("Perm: size mismatch in composition");
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        out[i] = apply(rhs.images_[i]);
    return Perm(std::move(out));
}

bool Perm::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

Perm Perm::flip(std::size_t n) {
    std::vector<int> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = static_cast<int>(n - i);
    return Perm(std::move(out));
}

std::vector<std::vector<int>> Perm::cycle_list() const {
    std::vector<std::vector<int>> cycles;
    std::vector<bool> seen(images_.size(), false);
    for (int start = 1; start <= static_cast<int>(images_.size()); ++start) {
        if (seen[static_cast<std::size_t>(start) - 1] || apply(start) == start)
            continue;
        std::vector<int> cyc;
        int cur = start;
        do {
            cyc.push_back(cur);
            seen[static_cast<std::size_t>(cur) - 1] = true;
            cur = apply(cur);
        } while (cur != start);
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

std::string Perm::cycles() const {
    auto list = cycle_list();
    if (list.empty()) return "()";
    std::ostringstream os;
    for (const auto& cyc : list) {
        os << "(";
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i) os << " ";
            os << cyc[i];
        }
        os << ")";
    }
    return os.str();
}

std::optional<Perm> Perm::parse_cycles(const std::string& text, std::size_t n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    std::vector<bool> used(n, false);

    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == ','))
            ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(') return std::nullopt;
        ++pos;
        std::vector<int> cyc;
        skip_ws();
        while (pos < text.size() && text[pos] != ')') {
            std::size_t end = pos;
            while (end < text.size() && text[end] >= '0' && text[end] <= '9')
                ++end;
            if (end == pos) return std::nullopt;
            int v = std::stoi(text.substr(pos, end - pos));
            if (v < 1 || v > static_cast<int>(n) || used[static_cast<std::size_t>(v) - 1])
                return std::nullopt;
            used[static_cast<std::size_t>(v) - 1] = true;
            cyc.push_back(v);
            pos = end;
            skip_ws();
        }
        if (pos >= text.size()) return std::nullopt;
        ++pos; // ')'
        for (std::size_t i = 0; i < cyc.size(); ++i)
            images[static_cast<std::size_t>(cyc[i]) - 1] = cyc[(i + 1) % cyc.size()];
        skip_ws();
    }
    return Perm(std::move(images));
}

Perm SCycle::as_perm(std::size_t n) const {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    auto install = [&](const std::vector<int>& cyc) {
        for (std::size_t i = 0; i < cyc.size(); ++i)
            images[static_cast<std::size_t>(cyc[i]) - 1] = cyc[(i + 1) % cyc.size()];
    };
    install(first);
    if (!second.empty()) install(second);
    return Perm(std::move(images));
}

Perm induced_involution(std::size_t n, Outer eps) {
    return eps == Outer::minus ? Perm::flip(n) : Perm(n);
}

bool commutes_with_involution(const Perm& p, Outer eps) {
    if (eps == Outer::plus) return true;
    Perm f = Perm::flip(p.size());
    return p * f == f * p;
}

std::vector<Perm> enumerate_w0(std::size_t n, Outer eps_s, std::size_t bound) {
    if (n < 1) throw ValidationError("enumerate_w0: rank must be >= 1");
    if (n > bound)
        throw CapacityError("enumerate_w0: rank " + std::to_string(n) +
                            " exceeds enumeration bound " + std::to_string(bound));
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    std::vector<Perm> out;
    do {
        Perm p(images);
        if (commutes_with_involution(p, eps_s)) out.push_back(std::move(p));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

std::vector<SCycle> s_cycle_decomposition(const Perm& sigma, Outer eps_s) {
    if (!commutes_with_involution(sigma, eps_s))
        throw ValidationError("s_cycle_decomposition: permutation does not commute "
                              "with the induced involution");
    auto cycles = sigma.cycle_list();
    std::vector<SCycle> out;
    if (eps_s == Outer::plus) {
        for (auto& c : cycles) out.push_back(SCycle{std::move(c), {}});
        return out;
    }
    const Perm f = Perm::flip(sigma.size());
    std::vector<bool> used(cycles.size(), false);
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        // Flip-conjugate of the cycle; stable cycles pair with themselves.
        std::vector<int> conj;
        conj.reserve(cycles[i].size());
        for (int v : cycles[i]) conj.push_back(f.apply(v));
        int conj_min = *std::min_element(conj.begin(), conj.end());
        std::size_t j = i;
        for (std::size_t k = 0; k < cycles.size(); ++k)
            if (cycles[k][0] == conj_min) { j = k; break; }
        if (j == i) {
            out.push_back(SCycle{cycles[i], {}});
        } else {
            used[j] = true;
            out.push_back(SCycle{cycles[i], cycles[j]});
        }
    }
    return out;
}

Perm sigma_of(const Perm& w, Outer eps_fr) {
    return induced_involution(w.size(), eps_fr) * w;
}

bool is_single_scycle_full_length(const Perm& sigma, Outer eps_s) {
    auto dec = s_cycle_decomposition(sigma, eps_s);
    return dec.size() == 1 && dec[0].length() == sigma.size();
}

} // namespace pconn
