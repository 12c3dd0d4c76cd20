#include "repro.hpp"

namespace vortexlab::repro {

// Frozen golden rendering of `census table`; regenerating it requires a
// reviewed change here and in tests/golden/census_table.csv.
const char* golden_census_csv() {
  return
      "item,genus,kind,param,class,d,status,dimC,euler,sw,compact,fueter,provenance\n"
      "1-empty,1,split,0,generic,-1,empty,0,0,0,true,false,computed\n"
      "1-empty,2,stable_generic,0,generic,-1,empty,0,0,0,true,false,paper-transcribed\n"
      "3-projbundle,1,split,0,generic,1,projective_bundle(J^1,CP^1),2,0,0,true,false,computed\n"
      "3-projbundle,1,split,0,generic,2,projective_bundle(J^2,CP^3),4,0,0,true,false,computed\n"
      "3-projbundle,2,stable_generic,0,generic,1,projective_bundle(J^1,CP^1),3,0,0,true,false,paper-transcribed\n"
      "3-projbundle,2,stable_generic,0,generic,2,projective_bundle(J^2,CP^3),5,0,0,true,false,paper-transcribed\n"
      "4-twopoints,1,split,0,generic,0,points(2),0,2,2,true,false,computed\n"
      "5-genus5curve,2,stable_generic,0,generic,0,curve(5),1,-8,8,true,false,paper-transcribed\n";
}

}  // namespace vortexlab::repro
