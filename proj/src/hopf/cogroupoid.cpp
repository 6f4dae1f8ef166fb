#include "hg/hopf/cogroupoid.hpp"

namespace hg {

MatrixComodule trivial_comodule(PresentationPtr algebra) {
    return MatrixComodule{"k", std::move(algebra), {{unit_element()}}};
}

std::string nonzero_status_name(NonzeroStatus s) {
    switch (s) {
        case NonzeroStatus::Certified: return "certified";
        case NonzeroStatus::Unverified: return "unverified";
        case NonzeroStatus::ExpectedZero: return "expected zero";
    }
    return "?";
}

HopfData CogroupoidData::hopf(std::size_t x) const {
    return HopfData{family + " " + objects[x], hom(x, x), delta(x, x, x), eps(x), antipode(x, x)};
}

CogroupoidData CogroupoidData::build(std::string family, std::vector<std::string> objects, Builder& b) {
    CogroupoidData c;
    c.family = std::move(family);
    c.objects = std::move(objects);
    std::size_t n = c.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            c.hom_.push_back(b.hom(x, y));
            c.status_.push_back(b.status(x, y));
        }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                AlgebraMorphism m;
                m.name = "Delta^" + c.objects[z] + "_" + c.pair_name(x, y);
                m.source = c.hom(x, y);
                m.target = {c.hom(x, z), c.hom(z, y)};
                m.images = b.delta(x, y, z, *c.hom(x, z), *c.hom(z, y));
                c.delta_.push_back(std::move(m));
            }
    for (std::size_t x = 0; x < n; ++x) {
        AlgebraMorphism m;
        m.name = "eps_" + c.objects[x];
        m.source = c.hom(x, x);
        m.images = b.eps(x);
        c.eps_.push_back(std::move(m));
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            AlgebraMorphism m;
            m.name = "S_" + c.pair_name(x, y);
            m.source = c.hom(x, y);
            m.target = {c.hom(y, x)};
            m.anti = true;
            m.images = b.antipode(x, y, *c.hom(y, x));
            c.antipode_.push_back(std::move(m));
        }
    return c;
}

CogroupoidData CogroupoidData::restrict_to(const std::vector<std::size_t>& objs) const {
    CogroupoidData c;
    c.family = family;
    c.finite = finite;
    for (auto o : objs) {
        c.objects.push_back(objects.at(o));
        if (!matrices.empty()) c.matrices.push_back(matrices.at(o));
    }
    for (auto x : objs)
        for (auto y : objs) {
            c.hom_.push_back(hom(x, y));
            c.status_.push_back(status(x, y));
        }
    for (auto x : objs)
        for (auto y : objs)
            for (auto z : objs) c.delta_.push_back(delta(x, y, z));
    for (auto x : objs) c.eps_.push_back(eps(x));
    for (auto x : objs)
        for (auto y : objs) c.antipode_.push_back(antipode(x, y));
    return c;
}

}  // namespace hg
