#include <minorb/realform.hpp>

#include <stdexcept>

namespace minorb {

std::vector<RealForm> catalog_real_forms(CartanType ambient) {
  std::vector<RealForm> out;
  const int n = ambient.rank();
  switch (ambient.family()) {
    case Family::A: {
      const int N = n + 1;
      out.push_back(RealForm::sl_R(N));
      if (N % 2 == 0 && N >= 4) out.push_back(RealForm::su_star(N));
      for (int q = 1; 2 * q <= N; ++q) {
        if (N - q == 1 && q == 1) continue;  // su_{1,1} = sl_2(R), already listed
        out.push_back(RealForm::su(N - q, q));
      }
      break;
    }
    case Family::B: {
      const int N = 2 * n + 1;
      for (int q = 1; 2 * q <= N; ++q) out.push_back(RealForm::so(N - q, q));
      break;
    }
    case Family::C: {
      out.push_back(RealForm::sp_R(n));
      for (int q = 1; 2 * q <= n; ++q) out.push_back(RealForm::sp(n - q, q));
      break;
    }
    case Family::D: {
      const int N = 2 * n;
      for (int q = 1; 2 * q <= N; ++q) out.push_back(RealForm::so(N - q, q));
      if (n >= 5) out.push_back(RealForm::so_star(N));
      break;
    }
    case Family::E:
      if (n == 6)
        for (int s : {6, 2, -14, -26}) out.push_back(RealForm::exceptional(Family::E, 6, s));
      if (n == 7)
        for (int s : {7, -5, -25}) out.push_back(RealForm::exceptional(Family::E, 7, s));
      if (n == 8)
        for (int s : {8, -24}) out.push_back(RealForm::exceptional(Family::E, 8, s));
      break;
    case Family::F:
      for (int s : {4, -20}) out.push_back(RealForm::exceptional(Family::F, 4, s));
      break;
    case Family::G:
      out.push_back(RealForm::exceptional(Family::G, 2, 2));
      break;
  }
  return out;
}

std::string cartan_class(const RealForm& f) {
  using Kind = RealForm::Kind;
  switch (f.kind()) {
    case Kind::SlR: return "AI";
    case Kind::SuStar: return "AII";
    case Kind::Su: return f.q() == 1 ? "AIV" : "AIII";
    case Kind::So:
      if (f.ambient().family() == Family::B) return f.q() == 1 ? "BII" : "BI";
      return f.q() == 1 ? "DII" : "DI";
    case Kind::SpR: return "CI";
    case Kind::Sp: return "CII";
    case Kind::SoStar: return "DIII";
    case Kind::Exceptional: {
      const int n = f.ambient().rank();
      const int s = f.signature();
      if (f.ambient().family() == Family::E && n == 6)
        return s == 6 ? "EI" : s == 2 ? "EII" : s == -14 ? "EIII" : "EIV";
      if (f.ambient().family() == Family::E && n == 7)
        return s == 7 ? "EV" : s == -5 ? "EVI" : "EVII";
      if (f.ambient().family() == Family::E && n == 8) return s == 8 ? "EVIII" : "EIX";
      if (f.ambient().family() == Family::F) return s == 4 ? "FI" : "FII";
      return "G";
    }
    case Kind::ComplexSimple: return "complex";
  }
  return "?";
}

}  // namespace minorb
