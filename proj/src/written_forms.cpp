#include "spinv/oracles.hpp"

namespace spinv {

// Written-out polynomial expansions in LaTeX form, kept verbatim.
const std::vector<WrittenForm>& written_forms()
{
    static const std::vector<WrittenForm> forms = {
        {"tangle_224", R"tex(V=
 &&(\psi_{ 003} \psi_{012}-\psi_{ 002 }\psi_{ 013})(\psi_{ 101}\psi_{ 110}-\psi_{ 100}\psi_{ 111})\nonumber\\
  &&+(\psi_{ 003}\psi_{ 011}-\psi_{ 001}\psi_{ 013})(\psi_{ 100}\psi_{ 112} -\psi_{ 102}\psi_{ 110})\nonumber \\
  &&+(\psi_{ 003}\psi_{ 010}-\psi_{ 000 }\psi_{ 013})(\psi_{ 102}\psi_{ 111} -\psi_{ 101}\psi_{ 112})\nonumber\\
   &&+ (\psi_{ 000 }\psi_{ 011}-\psi_{ 000 }\psi_{  010})(\psi_{ 102}\psi_{ 113}-\psi_{ 103}\psi_{ 112 })\nonumber\\
 &&+(\psi_{ 000 }\psi_{ 012}-\psi_{ 002 }\psi_{ 010})(\psi_{ 103}\psi_{ 111}-\psi_{ 101}\psi_{ 113})\nonumber\\
   &&+(\psi_{ 001}\psi_{ 012}-\psi_{ 002 }\psi_{ 011})(\psi_{ 100}\psi_{ 113 }   -\psi_{ 103}\psi_{ 110}),  )tex"},
        {"four_qubit_H", R"tex(H= &&\psi_{0000}\psi_{1111}-\psi_{0111}\psi_{1000} +\psi_{0110}\psi_{1001} +\psi_{0101}\psi_{1010} \nonumber\\
&&-\psi_{0100}\psi_{1011} + \psi_{ 0011}\psi_{1100} -\psi_{0010}\psi_{1101} -\psi_{0001}\psi_{1110},\nonumber\\)tex"},
        {"four_qubit_L", R"tex(L=&&\psi_{ 0011}\psi_{ 0110}\psi_{ 1001}\psi_{ 1100} -\psi_{ 0010}\psi_{ 0111}\psi_{1001}\psi_{ 1100}\nonumber\\&& -
\psi_{ 0011}\psi_{ 0101}\psi_{ 1010}\psi_{ 1100 }+\psi_{ 0001}\psi_{ 0111}\psi_{ 1010}\psi_{ 1100 }\nonumber\\&& +
\psi_{ 0010}\psi_{ 0101}\psi_{ 1011}\psi_{ 1100} -\psi_{ 0001}\psi_{ 0110}\psi_{ 1011}\psi_{ 1100 }\nonumber\\&&-
\psi_{ 0011}\psi_{ 0110}\psi_{ 1000}\psi_{ 1101} +\psi_{ 0010}\psi_{ 0111}\psi_{ 1000}\psi_{ 1101}\nonumber\\&& +
\psi_{ 0011}\psi_{ 0100}\psi_{ 1010}\psi_{ 1101} -\psi_{ 0000}\psi_{ 0111}\psi_{ 1010}\psi_{ 1101}\nonumber\\&& -
\psi_{ 0010}\psi_{ 0100}\psi_{ 1011}\psi_{ 1101} +\psi_{ 0000}\psi_{ 0110}\psi_{ 1011}\psi_{ 1101}\nonumber\\&& +
\psi_{ 0011}\psi_{ 0101}\psi_{ 1000}\psi_{ 1110} -\psi_{ 0001}\psi_{ 0111}\psi_{ 1000}\psi_{ 1110}\nonumber\\&& -
\psi_{ 0011}\psi_{ 0100}\psi_{ 1001}\psi_{ 1110} +\psi_{ 0000}\psi_{ 0111}\psi_{ 1001}\psi_{ 1110}\nonumber\\&& +
\psi_{ 0001}\psi_{ 0100}\psi_{ 1011}\psi_{ 1110} -\psi_{ 0000}\psi_{ 0101}\psi_{ 1011}\psi_{ 1110}\nonumber\\&& -
\psi_{ 0010}\psi_{ 0101}\psi_{ 1000}\psi_{ 1111} +\psi_{ 0001}\psi_{ 0110}\psi_{ 1000}\psi_{ 1111}\nonumber\\&& +
\psi_{ 0010}\psi_{ 0100}\psi_{ 1001}\psi_{ 1111} -\psi_{ 0000}\psi_{ 0110}\psi_{ 1001}\psi_{ 1111}\nonumber\\&& -
\psi_{ 0001}\psi_{ 0100}\psi_{ 1010}\psi_{ 1111} +\psi_{ 0000}\psi_{ 0101}\psi_{ 1010}\psi_{ 1111},)tex"},
        {"four_qubit_M", R"tex(M =&& -\psi_{ 0101}\psi_{ 0110}\psi_{ 1001}\psi_{ 1010} +\psi_{ 0100}\psi_{ 0111}\psi_{ 1001}\psi_{ 1010}\nonumber\\&& +
 \psi_{ 0101}\psi_{ 0110}\psi_{ 1000}\psi_{ 1011} -\psi_{ 0100}\psi_{ 0111}\psi_{ 1000}\psi_{ 1011}\nonumber\\&& +
 \psi_{ 0011}\psi_{ 0101}\psi_{ 1010}\psi_{ 1100} -\psi_{ 0001}\psi_{ 0111}\psi_{ 1010}\psi_{ 1100}\nonumber\\&& -
\psi_{  0010}\psi_{ 0101}\psi_{ 1011}\psi_{ 1100} +\psi_{ 0000}\psi_{ 0111}\psi_{ 1011}\psi_{ 1100}\nonumber\\&& -
 \psi_{ 0011}\psi_{ 0100}\psi_{ 1010}\psi_{ 1101} +\psi_{ 0001}\psi_{ 0110}\psi_{ 1010}\psi_{ 1101}\nonumber\\&& +
\psi_{  0010}\psi_{ 0100}\psi_{ 1011}\psi_{ 1101} -\psi_{ 0000}\psi_{ 0110}\psi_{ 1011}\psi_{ 1101}\nonumber\\&& -
\psi_{  0011}\psi_{ 0101}\psi_{ 1000}\psi_{ 1110} +\psi_{ 0001}\psi_{ 0111}\psi_{ 1000}\psi_{ 1110}\nonumber\\&& +
\psi_{  0010}\psi_{ 0101}\psi_{ 1001}\psi_{ 1110} -\psi_{ 0000}\psi_{ 0111}\psi_{ 1001}\psi_{ 1110 }\nonumber\\&&-
\psi_{  0001}\psi_{ 0010}\psi_{ 1101}\psi_{ 1110} +\psi_{ 0000}\psi_{ 0011}\psi_{ 1101}\psi_{ 1110} \nonumber\\&&+
\psi_{  0011}\psi_{ 0100}\psi_{ 1000}\psi_{ 1111} -\psi_{ 0001}\psi_{ 0110}\psi_{ 1000}\psi_{ 1111 }\nonumber\\&&-
\psi_{  0010}\psi_{ 0100}\psi_{ 1001}\psi_{ 1111} +\psi_{ 0000}\psi_{ 0110}\psi_{ 1001}\psi_{ 1111 }\nonumber\\&&+
\psi_{  0001}\psi_{ 0010}\psi_{ 1100}\psi_{ 1111} -\psi_{ 0000}\psi_{ 0011}\psi_{ 1100}\psi_{ 1111}. )tex"},
        {"I2a", R"tex(   I_{2a} = -2 (&&\psi_{133}\psi_{200} - \psi_{132}\psi_{201} + \psi_{131}\psi_{202} - \psi_{130}\psi_{203} - \psi_{123}\psi_{210} +
       \psi_{122}\psi_{211} - \psi_{121}\psi_{212} + \psi_{120}\psi_{213}\nonumber\\ &&+ \psi_{113}\psi_{220} - \psi_{112}\psi_{221} +
      \psi_{111}\psi_{222} - \psi_{110}\psi_{223} - \psi_{103}\psi_{230} + \psi_{102}\psi_{231} - \psi_{101}\psi_{232} +
      \psi_{100}\psi_{233})^2\nonumber\\-
   2 (&&\psi_{033}\psi_{300} - \psi_{032}\psi_{301} + \psi_{031}\psi_{302} - \psi_{030}\psi_{303} - \psi_{023}\psi_{310} +
      \psi_{022}\psi_{311} - \psi_{021}\psi_{312} + \psi_{020}\psi_{313}\nonumber\\ &&+ \psi_{013}\psi_{320} - \psi_{012}\psi_{321} +
      \psi_{011}\psi_{322} - \psi_{010}\psi_{323} - \psi_{003}\psi_{330} + \psi_{002}\psi_{331} - \psi_{001}\psi_{332} +
      \psi_{000}\psi_{333})^2\nonumber\\ +
   8 (&&\psi_{113}\psi_{120} - \psi_{112}\psi_{121} + \psi_{111}\psi_{122} - \psi_{110}\psi_{123} - \psi_{103}\psi_{130} +
      \psi_{102}\psi_{131} - \psi_{101}\psi_{132} + \psi_{100}\psi_{133})\nonumber\\\times  (&&\psi_{213}\psi_{220} - \psi_{212}\psi_{221} +
      \psi_{211}\psi_{222} - \psi_{210}\psi_{223} - \psi_{203}\psi_{230} + \psi_{202}\psi_{231} - \psi_{201}\psi_{232} +
      \psi_{200}\psi_{233})\nonumber\\ +
   8 (&&\psi_{013}\psi_{020} - \psi_{012}\psi_{021} + \psi_{011}\psi_{022} - \psi_{010}\psi_{023} - \psi_{003}\psi_{030} +
      \psi_{002}\psi_{031} - \psi_{001}\psi_{032} + \psi_{000}\psi_{033}) \nonumber\\\times (&&\psi_{313}\psi_{320} - \psi_{312}\psi_{321} +
      \psi_{311}\psi_{322} - \psi_{310}\psi_{323} - \psi_{303}\psi_{330} + \psi_{302}\psi_{331} - \psi_{301}\psi_{332} +
      \psi_{300}\psi_{333})\nonumber\\  +
   4 (&&\psi_{033}\psi_{200} - \psi_{032}\psi_{201} + \psi_{031}\psi_{202} - \psi_{030}\psi_{203} - \psi_{023}\psi_{210} +
      \psi_{022}\psi_{211} - \psi_{021}\psi_{212} + \psi_{020}\psi_{213}\nonumber\\ &&+ \psi_{013}\psi_{220} - \psi_{012}\psi_{221} +
      \psi_{011}\psi_{222} - \psi_{010}\psi_{223} - \psi_{003}\psi_{230} + \psi_{002}\psi_{231} - \psi_{001}\psi_{232} +
      \psi_{000}\psi_{233})\nonumber\\\times  (&&\psi_{133}\psi_{300} - \psi_{132}\psi_{301} + \psi_{131}\psi_{302} - \psi_{130}\psi_{303} -
      \psi_{123}\psi_{310} + \psi_{122}\psi_{311} - \psi_{121}\psi_{312} + \psi_{120}\psi_{313}\nonumber\\ &&+ \psi_{113}\psi_{320} -
      \psi_{112}\psi_{321} + \psi_{111}\psi_{322} - \psi_{110}\psi_{323} - \psi_{103}\psi_{330} + \psi_{102}\psi_{331} -
      \psi_{101}\psi_{332} + \psi_{100}\psi_{333})\nonumber\\ -
   4 (&&\psi_{033}\psi_{100} - \psi_{032}\psi_{101} + \psi_{031}\psi_{102} - \psi_{030}\psi_{103} - \psi_{023}\psi_{110} +
      \psi_{022}\psi_{111} - \psi_{021}\psi_{112} + \psi_{020}\psi_{113}\nonumber\\ &&+ \psi_{013}\psi_{120} - \psi_{012}\psi_{121} +
      \psi_{011}\psi_{122} - \psi_{010}\psi_{123} - \psi_{003}\psi_{130} + \psi_{002}\psi_{131} - \psi_{001}\psi_{132} +
      \psi_{000}\psi_{133})\nonumber\\\times  (&&\psi_{233}\psi_{300} - \psi_{232}\psi_{301} + \psi_{231}\psi_{302} - \psi_{230}\psi_{303} -
      \psi_{223}\psi_{310} + \psi_{222}\psi_{311} - \psi_{221}\psi_{312} + \psi_{220}\psi_{313}\nonumber\\ &&+ \psi_{213}\psi_{320} -
      \psi_{212}\psi_{321} + \psi_{211}\psi_{322} - \psi_{210}\psi_{323} - \psi_{203}\psi_{330} + \psi_{202}\psi_{331} -
      \psi_{201}\psi_{332} + \psi_{200}\psi_{333}),)tex"},
        {"I2b", R"tex( I_{2b} = -2 (&&\psi_{123}\psi_{210}- \psi_{122}\psi_{211}+ \psi_{121}\psi_{212}- \psi_{120}\psi_{213}+ \psi_{113}\psi_{220}-
      \psi_{112}\psi_{221}+ \psi_{111}\psi_{222}- \psi_{110}\psi_{223}\nonumber\\&&- \psi_{023}\psi_{310}+ \psi_{022}\psi_{311}-
     \psi_{021}\psi_{312}+ \psi_{020}\psi_{313}- \psi_{013}\psi_{320}+ \psi_{012}\psi_{321}- \psi_{011}\psi_{322}+
     \psi_{010}\psi_{323})^2\nonumber\\ -
  2 (&&\psi_{133}\psi_{200}- \psi_{132}\psi_{201}+ \psi_{131}\psi_{202}- \psi_{130}\psi_{203}+ \psi_{103}\psi_{230}-
     \psi_{102}\psi_{231}+ \psi_{101}\psi_{232}- \psi_{100}\psi_{233}\nonumber\\&&- \psi_{033}\psi_{300}+ \psi_{032}\psi_{301}-
     \psi_{031}\psi_{302}+ \psi_{030}\psi_{303}- \psi_{003}\psi_{330}+ \psi_{002}\psi_{331}- \psi_{001}\psi_{332}+
     \psi_{000}\psi_{333})^2\nonumber\\+
  8 (&&\psi_{113}\psi_{210}- \psi_{112}\psi_{211}+ \psi_{111}\psi_{212}- \psi_{110}\psi_{213}- \psi_{013}\psi_{310}+
     \psi_{012}\psi_{311}- \psi_{011}\psi_{312}+ \psi_{010}\psi_{313})\nonumber\\\times  (&&\psi_{123}\psi_{220}- \psi_{122}\psi_{221}+
     \psi_{121}\psi_{222}- \psi_{120}\psi_{223}- \psi_{023}\psi_{320}+ \psi_{022}\psi_{321}- \psi_{021}\psi_{322}+
     \psi_{020}\psi_{323})\nonumber\\ +
  8 (&&\psi_{103}\psi_{200}- \psi_{102}\psi_{201}+ \psi_{101}\psi_{202}- \psi_{100}\psi_{203}- \psi_{003}\psi_{300}+
     \psi_{002}\psi_{301}- \psi_{001}\psi_{302}+ \psi_{000}\psi_{303})\nonumber\\ \times (&&\psi_{133}\psi_{230}- \psi_{132}\psi_{231}+
     \psi_{131}\psi_{232}- \psi_{130}\psi_{233}- \psi_{033}\psi_{330}+ \psi_{032}\psi_{331}- \psi_{031}\psi_{332}+
     \psi_{030}\psi_{333})\nonumber\\+
  4 (&&\psi_{123}\psi_{200}- \psi_{122}\psi_{201}+ \psi_{121}\psi_{202}- \psi_{120}\psi_{203}+ \psi_{103}\psi_{220}-
     \psi_{102}\psi_{221}+ \psi_{101}\psi_{222}- \psi_{100}\psi_{223}\nonumber\\&&- \psi_{023}\psi_{300}+ \psi_{022}\psi_{301}-
     \psi_{021}\psi_{302}+ \psi_{020}\psi_{303}- \psi_{003}\psi_{320}+ \psi_{002}\psi_{321}- \psi_{001}\psi_{322}+
     \psi_{000}\psi_{323})\nonumber\\\times (&&\psi_{133}\psi_{210}- \psi_{132}\psi_{211}+ \psi_{131}\psi_{212}- \psi_{130}\psi_{213}+
     \psi_{113}\psi_{230}- \psi_{112}\psi_{231}+ \psi_{111}\psi_{232}- \psi_{110}\psi_{233}\nonumber\\&&- \psi_{033}\psi_{310}+
     \psi_{032}\psi_{311}- \psi_{031}\psi_{312}+ \psi_{030}\psi_{313}- \psi_{013}\psi_{330}+ \psi_{012}\psi_{331}-
     \psi_{011}\psi_{332}+ \psi_{010}\psi_{333})\nonumber\\ -
  4 (&&\psi_{113}\psi_{200}- \psi_{112}\psi_{201}+ \psi_{111}\psi_{202}- \psi_{110}\psi_{203}+ \psi_{103}\psi_{210}-
     \psi_{102}\psi_{211}+ \psi_{101}\psi_{212}- \psi_{100}\psi_{213}\nonumber\\&&- \psi_{013}\psi_{300}+ \psi_{012}\psi_{301}-
     \psi_{011}\psi_{302}+ \psi_{010}\psi_{303}- \psi_{003}\psi_{310}+ \psi_{002}\psi_{311}- \psi_{001}\psi_{312}+
     \psi_{000}\psi_{313}) \nonumber\\\times (&&\psi_{133}\psi_{220}- \psi_{132}\psi_{221}+ \psi_{131}\psi_{222}- \psi_{130}\psi_{223}+
     \psi_{123}\psi_{230}- \psi_{122}\psi_{231}+ \psi_{121}\psi_{232}- \psi_{120}\psi_{233}\nonumber\\&&- \psi_{033}\psi_{320}+
     \psi_{032}\psi_{321}- \psi_{031}\psi_{322}+ \psi_{030}\psi_{323}- \psi_{023}\psi_{330}+ \psi_{022}\psi_{331}-
     \psi_{021}\psi_{332}+ \psi_{020}\psi_{333}),   )tex"},
        {"I2c", R"tex( I_{2c} = -2 (&&\psi_{132}\psi_{201}+ \psi_{131}\psi_{202}- \psi_{122}\psi_{211}- \psi_{121}\psi_{212}+ \psi_{112}\psi_{221}+
      \psi_{111}\psi_{222}- \psi_{102}\psi_{231}- \psi_{101}\psi_{232}\nonumber\\&&- \psi_{032}\psi_{301}- \psi_{031}\psi_{302}+
     \psi_{022}\psi_{311}+ \psi_{021}\psi_{312}- \psi_{012}\psi_{321}- \psi_{011}\psi_{322}+ \psi_{002}\psi_{331}+
     \psi_{001}\psi_{332})^2\nonumber\\ -
  2 (&&\psi_{133}\psi_{200}+ \psi_{130}\psi_{203}- \psi_{123}\psi_{210}- \psi_{120}\psi_{213}+ \psi_{113}\psi_{220}+
     \psi_{110}\psi_{223}- \psi_{103}\psi_{230}- \psi_{100}\psi_{233}\nonumber\\&&- \psi_{033}\psi_{300}- \psi_{030}\psi_{303}+
     \psi_{023}\psi_{310}+ \psi_{020}\psi_{313}- \psi_{013}\psi_{320}- \psi_{010}\psi_{323}+ \psi_{003}\psi_{330}+
     \psi_{000}\psi_{333})^2\nonumber\\+
  8 (&&\psi_{131}\psi_{201}- \psi_{121}\psi_{211}+ \psi_{111}\psi_{221}- \psi_{101}\psi_{231}- \psi_{031}\psi_{301}+
     \psi_{021}\psi_{311}- \psi_{011}\psi_{321}+ \psi_{001}\psi_{331})\nonumber\\\times  (&&\psi_{132}\psi_{202}- \psi_{122}\psi_{212}+
     \psi_{112}\psi_{222}- \psi_{102}\psi_{232}- \psi_{032}\psi_{302}+ \psi_{022}\psi_{312}- \psi_{012}\psi_{322}+
     \psi_{002}\psi_{332})\nonumber\\ +
  8 (&&\psi_{130}\psi_{200}- \psi_{120}\psi_{210}+ \psi_{110}\psi_{220}- \psi_{100}\psi_{230}- \psi_{030}\psi_{300}+
     \psi_{020}\psi_{310}- \psi_{010}\psi_{320}+ \psi_{000}\psi_{330})\nonumber\\\times (&& \psi_{133}\psi_{203}- \psi_{123}\psi_{213}+
     \psi_{113}\psi_{223}- \psi_{103}\psi_{233}- \psi_{033}\psi_{303}+ \psi_{023}\psi_{313}- \psi_{013}\psi_{323}+
     \psi_{003}\psi_{333})\nonumber\\+
  4 (&&\psi_{132}\psi_{200}+ \psi_{130}\psi_{202}- \psi_{122}\psi_{210}- \psi_{120}\psi_{212}+ \psi_{112}\psi_{220}+
     \psi_{110}\psi_{222}- \psi_{102}\psi_{230}- \psi_{100}\psi_{232}\nonumber\\&&- \psi_{032}\psi_{300}- \psi_{030}\psi_{302}+
     \psi_{022}\psi_{310}+ \psi_{020}\psi_{312}- \psi_{012}\psi_{320}- \psi_{010}\psi_{322}+ \psi_{002}\psi_{330}+
     \psi_{000}\psi_{332})\nonumber\\\times  (&&\psi_{133}\psi_{201}+ \psi_{131}\psi_{203}- \psi_{123}\psi_{211}- \psi_{121}\psi_{213}+
     \psi_{113}\psi_{221}+ \psi_{111}\psi_{223}- \psi_{103}\psi_{231}- \psi_{101}\psi_{233}\nonumber\\&&- \psi_{033}\psi_{301}-
     \psi_{031}\psi_{303}+ \psi_{023}\psi_{311}+ \psi_{021}\psi_{313}- \psi_{013}\psi_{321}- \psi_{011}\psi_{323}+
     \psi_{003}\psi_{331}+ \psi_{001}\psi_{333})\nonumber\\ -
  4 (&&\psi_{131}\psi_{200}+ \psi_{130}\psi_{201}- \psi_{121}\psi_{210}- \psi_{120}\psi_{211}+ \psi_{111}\psi_{220}+
     \psi_{110}\psi_{221}- \psi_{101}\psi_{230}- \psi_{100}\psi_{231}\nonumber\\&&- \psi_{031}\psi_{300}- \psi_{030}\psi_{301}+
     \psi_{021}\psi_{310}+ \psi_{020}\psi_{311}- \psi_{011}\psi_{320}- \psi_{010}\psi_{321}+ \psi_{001}\psi_{330}+
     \psi_{000}\psi_{331}) \nonumber\\\times (&&\psi_{133}\psi_{202}+ \psi_{132}\psi_{203}- \psi_{123}\psi_{212}- \psi_{122}\psi_{213}+
     \psi_{113}\psi_{222}+ \psi_{112}\psi_{223}- \psi_{103}\psi_{232}- \psi_{102}\psi_{233}\nonumber\\&&- \psi_{033}\psi_{302}-
     \psi_{032}\psi_{303}+ \psi_{023}\psi_{312}+ \psi_{022}\psi_{313}- \psi_{013}\psi_{322}- \psi_{012}\psi_{323}+
     \psi_{003}\psi_{332}+ \psi_{002}\psi_{333}). )tex"},
        {"I3a", R"tex(I_{3a} = -2 (&&\psi_{011}\psi_{ 100} -\psi_{ 010 }\psi_{ 101} +\psi_{ 013}\psi_{ 102} -\psi_{ 012}\psi_{ 103 }-\psi_{ 001}   \psi_{ 110 }+
     \psi_{ 000}\psi_{ 111} -\psi_{ 003}\psi_{ 112} +\psi_{ 002}\psi_{ 113}\nonumber\\ &&+\psi_{ 031}\psi_{ 120} -\psi_{ 030}\psi_{ 121} +
   \psi_{  033}\psi_{ 122} -\psi_{ 032}\psi_{ 123 }-\psi_{ 021}\psi_{ 130} +\psi_{ 020}\psi_{ 131} -\psi_{ 023}\psi_{ 132} +
    \psi_{ 022}\psi_{ 133})^2\nonumber\\
  -
  2 (&&\psi_{211} \psi_{300} - \psi_{210} \psi_{301} + \psi_{213} \psi_{302} - \psi_{212} \psi_{303} - \psi_{201} \psi_{310} +
     \psi_{200} \psi_{311} - \psi_{203} \psi_{312} + \psi_{202} \psi_{313}\nonumber\nonumber\\ &&+ \psi_{231} \psi_{320} - \psi_{230} \psi_{321} +
     \psi_{233} \psi_{322} - \psi_{232 }\psi_{323} - \psi_{221} \psi_{330} + \psi_{220} \psi_{331} - \psi_{223} \psi_{332} +
     \psi_{222} \psi_{333})^2\nonumber\\
     +
  8 (&&\psi_{ 001}\psi_{ 010} -\psi_{ 000}\psi_{ 011} +\psi_{ 003}\psi_{ 012} -\psi_{ 002}\psi_{ 013} +\psi_{ 021}\psi_{ 030 }-
    \psi_{ 020}\psi_{ 031} +\psi_{ 023}\psi_{ 032} -\psi_{ 022}\psi_{ 033})\nonumber\\\times   (&&\psi_{ 101}\psi_{ 110} -\psi_{ 100} \psi_{ 111} +
    \psi_{ 103}\psi_{ 112} -\psi_{ 102}\psi_{ 113} +\psi_{ 121}\psi_{ 130 }-\psi_{ 120 }\psi_{ 131} +\psi_{ 123}\psi_{ 132} -
    \psi_{ 122}\psi_{ 133})\nonumber\\
      +
  8 (&&\psi_{201} \psi_{210} - \psi_{200} \psi_{211} + \psi_{203} \psi_{212} - \psi_{202} \psi_{213} + \psi_{221 }\psi_{230} -
     \psi_{220} \psi_{231} + \psi_{223 }\psi_{232 }- \psi_{222} \psi_{233})\nonumber\\\times   (&&\psi_{301} \psi_{310} - \psi_{300} \psi_{311} +
     \psi_{303} \psi_{312} - \psi_{302} \psi_{313 }+ \psi_{321} \psi_{330} - \psi_{320} \psi_{331} + \psi_{323} \psi_{332} -
     \psi_{322} \psi_{333})\nonumber\\
     -
  4 (&&\psi_{ 111}\psi_{ 200} -\psi_{ 110}\psi_{ 201} + \psi_{113} \psi_{202} - \psi_{112} \psi_{203} - \psi_{101} \psi_{210} +
     \psi_{100} \psi_{211} -\psi_{ 103}\psi_{ 212} +\psi_{ 102}\psi_{ 213} \nonumber\\&&+\psi_{ 131}\psi_{ 220} - \psi_{130} \psi_{221} +
     \psi_{133} \psi_{222} -\psi_{ 132}\psi_{ 223} -\psi_{ 121}\psi_{ 230} + \psi_{120} \psi_{231 }- \psi_{123} \psi_{232} +
     \psi_{122} \psi_{233})\nonumber\\\times  (&&\psi_{011} \psi_{300} - \psi_{010} \psi_{301} + \psi_{013} \psi_{302} - \psi_{012} \psi_{303} -
     \psi_{001} \psi_{310} + \psi_{000} \psi_{311} - \psi_{003} \psi_{312} + \psi_{002} \psi_{313}\nonumber\\ &&+ \psi_{031} \psi_{320} -
     \psi_{030} \psi_{321} + \psi_{033} \psi_{322} - \psi_{032} \psi_{323} - \psi_{021} \psi_{330} + \psi_{020} \psi_{331} -
     \psi_{023} \psi_{332} + \psi_{022} \psi_{333})\nonumber\\ +
  4 (&&\psi_{011 }\psi_{200} - \psi_{010} \psi_{201} + \psi_{013} \psi_{202} - \psi_{012} \psi_{203} - \psi_{001} \psi_{210} +
     \psi_{000} \psi_{211} - \psi_{003} \psi_{212} + \psi_{002} \psi_{213}\nonumber\\&& + \psi_{031} \psi_{220} - \psi_{030} \psi_{221} +
     \psi_{033} \psi_{222} - \psi_{032} \psi_{223} - \psi_{021} \psi_{230} + \psi_{020 }\psi_{231 }- \psi_{023} \psi_{232} +
     \psi_{022} \psi_{233})\nonumber\\\times   (&&\psi_{111} \psi_{300} - \psi_{110 }\psi_{301} + \psi_{113} \psi_{302} - \psi_{112} \psi_{303} -
     \psi_{101} \psi_{310} + \psi_{100} \psi_{311} - \psi_{103} \psi_{312} + \psi_{102} \psi_{313}\nonumber\\ &&+ \psi_{131} \psi_{320} -
     \psi_{130} \psi_{321} + \psi_{133} \psi_{322} - \psi_{132} \psi_{323} - \psi_{121} \psi_{330 }+ \psi_{120 }\psi_{331} -
     \psi_{123} \psi_{332} + \psi_{122} \psi_{333}),)tex"},
        {"I3b", R"tex( I_{3b} = -2 (&&\psi_{011}\psi_{100}- \psi_{010}\psi_{101}+ \psi_{013}\psi_{102}- \psi_{012}\psi_{103}+ \psi_{001}\psi_{110}-
       \psi_{000}\psi_{111}+ \psi_{003}\psi_{112}- \psi_{002}\psi_{113}\nonumber\\&&+ \psi_{211}\psi_{300}- \psi_{210}\psi_{301}+
      \psi_{213}\psi_{302}- \psi_{212}\psi_{303}+ \psi_{201}\psi_{310}- \psi_{200}\psi_{311}+ \psi_{203}\psi_{312}-
      \psi_{202}\psi_{313})^2\nonumber\\ -
   2 (&&\psi_{031}\psi_{120}- \psi_{030}\psi_{121}+ \psi_{033}\psi_{122}- \psi_{032}\psi_{123}+ \psi_{021}\psi_{130}-
      \psi_{020}\psi_{131}+ \psi_{023}\psi_{132}- \psi_{022}\psi_{133}\nonumber\\ &&+\psi_{231}\psi_{320}- \psi_{230}\psi_{321}+
      \psi_{233}\psi_{322}- \psi_{232}\psi_{323}+ \psi_{221}\psi_{330}- \psi_{220}\psi_{331}+ \psi_{223}\psi_{332}-
      \psi_{222}\psi_{333})^2\nonumber\\ +
   8 (&&\psi_{021}\psi_{120}- \psi_{020}\psi_{121}+ \psi_{023}\psi_{122}- \psi_{022}\psi_{123}+ \psi_{221}\psi_{320}-
      \psi_{220}\psi_{321}+ \psi_{223}\psi_{322}- \psi_{222}\psi_{323})\nonumber\\\times (&&\psi_{031}\psi_{130}- \psi_{030}\psi_{131}+
      \psi_{033}\psi_{132}- \psi_{032}\psi_{133}+ \psi_{231}\psi_{330}- \psi_{230}\psi_{331}+ \psi_{233}\psi_{332}-
      \psi_{232}\psi_{333})\nonumber\\ +
   8 (&&\psi_{001}\psi_{100}- \psi_{000}\psi_{101}+ \psi_{003}\psi_{102}- \psi_{002}\psi_{103}+ \psi_{201}\psi_{300}-
      \psi_{200}\psi_{301}+ \psi_{203}\psi_{302}- \psi_{202}\psi_{303})\nonumber\\\times (&&\psi_{011}\psi_{110}- \psi_{010}\psi_{111}+
      \psi_{013}\psi_{112}- \psi_{012}\psi_{113}+ \psi_{211}\psi_{310}- \psi_{210}\psi_{311}+ \psi_{213}\psi_{312}-
      \psi_{212}\psi_{313})\nonumber\\ -
   4 (&&\psi_{021}\psi_{110}- \psi_{020}\psi_{111}+ \psi_{023}\psi_{112}- \psi_{022}\psi_{113}+ \psi_{011}\psi_{120}-
      \psi_{010}\psi_{121}+ \psi_{013}\psi_{122}- \psi_{012}\psi_{123}\nonumber\\&& + \psi_{221}\psi_{310}- \psi_{220}\psi_{311}+
      \psi_{223}\psi_{312}- \psi_{222}\psi_{313}+ \psi_{211}\psi_{320}- \psi_{210}\psi_{321}+ \psi_{213}\psi_{322}-
      \psi_{212}\psi_{323})\nonumber\\\times  (&&\psi_{031}\psi_{100}- \psi_{030}\psi_{101}+ \psi_{033}\psi_{102}- \psi_{032}\psi_{103}+
      \psi_{001}\psi_{130}- \psi_{000}\psi_{131}+ \psi_{003}\psi_{132}- \psi_{002}\psi_{133}\nonumber\\ &&+ \psi_{231}\psi_{300}-
      \psi_{230}\psi_{301}+ \psi_{233}\psi_{302}- \psi_{232}\psi_{303}+ \psi_{201}\psi_{330}- \psi_{200}\psi_{331}+
      \psi_{203}\psi_{332}- \psi_{202}\psi_{333})\nonumber\\ +
   4 (&&\psi_{021}\psi_{100}- \psi_{020}\psi_{101}+ \psi_{023}\psi_{102}- \psi_{022}\psi_{103}+ \psi_{001}\psi_{120}-
      \psi_{000}\psi_{121}+ \psi_{003}\psi_{122}- \psi_{002}\psi_{123}\nonumber\\&&+ \psi_{221}\psi_{300}- \psi_{220}\psi_{301}+
      \psi_{223}\psi_{302}- \psi_{222}\psi_{303}+ \psi_{201}\psi_{320}- \psi_{200}\psi_{321}+ \psi_{203}\psi_{322}-
      \psi_{202}\psi_{323})\nonumber\\\times (&&\psi_{031}\psi_{110}- \psi_{030}\psi_{111}+ \psi_{033}\psi_{112}- \psi_{032}\psi_{113}+
      \psi_{011}\psi_{130}- \psi_{010}\psi_{131}+ \psi_{013}\psi_{132}- \psi_{012}\psi_{133}\nonumber\\ &&+ \psi_{231}\psi_{310}-
      \psi_{230}\psi_{311}+ \psi_{233}\psi_{312}- \psi_{232}\psi_{313}+ \psi_{211}\psi_{330}- \psi_{210}\psi_{331}+
      \psi_{213}\psi_{332}- \psi_{212}\psi_{333}),     )tex"},
        {"I3c", R"tex(  I_{3c} = -2 (&&\psi_{011}\psi_{100} + \psi_{010}\psi_{101} - \psi_{001}\psi_{110} - \psi_{000}\psi_{111} + \psi_{031}\psi_{120} +
       \psi_{030}\psi_{121} - \psi_{021}\psi_{130} - \psi_{020}\psi_{131}\nonumber\\ &&+ \psi_{211}\psi_{300} + \psi_{210}\psi_{301} -
      \psi_{201}\psi_{310} - \psi_{200}\psi_{311} + \psi_{231}\psi_{320} + \psi_{230}\psi_{321} - \psi_{221}\psi_{330} -
      \psi_{220}\psi_{331})^2\nonumber\\  -
   2 (&&\psi_{013}\psi_{102} + \psi_{012}\psi_{103} - \psi_{003}\psi_{112} - \psi_{002}\psi_{113} + \psi_{033}\psi_{122} +
      \psi_{032}\psi_{123} - \psi_{023}\psi_{132} - \psi_{022}\psi_{133}\nonumber\\&& + \psi_{213}\psi_{302} + \psi_{212}\psi_{303} -
      \psi_{203}\psi_{312} - \psi_{202}\psi_{313} + \psi_{233}\psi_{322} + \psi_{232}\psi_{323} - \psi_{223}\psi_{332} -
      \psi_{222}\psi_{333})^2\nonumber\\ +
   8 (&&\psi_{012}\psi_{102} - \psi_{002}\psi_{112} + \psi_{032}\psi_{122} - \psi_{022}\psi_{132} + \psi_{212}\psi_{302} -
      \psi_{202}\psi_{312} + \psi_{232}\psi_{322} - \psi_{222}\psi_{332})\nonumber\\\times (&&\psi_{013}\psi_{103} - \psi_{003}\psi_{113} +
      \psi_{033}\psi_{123} - \psi_{023}\psi_{133} + \psi_{213}\psi_{303} - \psi_{203}\psi_{313} + \psi_{233}\psi_{323} -
      \psi_{223}\psi_{333})\nonumber\\ +
   8 (&&\psi_{010}\psi_{100} - \psi_{000}\psi_{110} + \psi_{030}\psi_{120} - \psi_{020}\psi_{130} + \psi_{210}\psi_{300} -
      \psi_{200}\psi_{310} + \psi_{230}\psi_{320} - \psi_{220}\psi_{330})\nonumber\\\times (&&\psi_{011}\psi_{101} - \psi_{001}\psi_{111} +
      \psi_{031}\psi_{121} - \psi_{021}\psi_{131} + \psi_{211}\psi_{301} - \psi_{201}\psi_{311} + \psi_{231}\psi_{321} -
      \psi_{221}\psi_{331})\nonumber\\ -
   4 (&&\psi_{012}\psi_{101} + \psi_{011}\psi_{102} - \psi_{002}\psi_{111} - \psi_{001}\psi_{112} + \psi_{032}\psi_{121} +
      \psi_{031}\psi_{122} - \psi_{022}\psi_{131} - \psi_{021}\psi_{132}\nonumber\\&& + \psi_{212}\psi_{301} + \psi_{211}\psi_{302} -
      \psi_{202}\psi_{311} - \psi_{201}\psi_{312} + \psi_{232}\psi_{321} + \psi_{231}\psi_{322} - \psi_{222}\psi_{331} -
      \psi_{221}\psi_{332})\nonumber\\\times (&&\psi_{013}\psi_{100} + \psi_{010}\psi_{103} - \psi_{003}\psi_{110} - \psi_{000}\psi_{113} +
      \psi_{033}\psi_{120} + \psi_{030}\psi_{123} - \psi_{023}\psi_{130} - \psi_{020}\psi_{133}\nonumber\\ &&+ \psi_{213}\psi_{300} +
      \psi_{210}\psi_{303} - \psi_{203}\psi_{310} - \psi_{200}\psi_{313} + \psi_{233}\psi_{320} + \psi_{230}\psi_{323} -
      \psi_{223}\psi_{330} - \psi_{220}\psi_{333})\nonumber\\ +
   4 (&&\psi_{012}\psi_{100} + \psi_{010}\psi_{102} - \psi_{002}\psi_{110} - \psi_{000}\psi_{112} + \psi_{032}\psi_{120} +
      \psi_{030}\psi_{122} - \psi_{022}\psi_{130} - \psi_{020}\psi_{132}\nonumber\\ &&+ \psi_{212}\psi_{300} + \psi_{210}\psi_{302} -
      \psi_{202}\psi_{310} - \psi_{200}\psi_{312} + \psi_{232}\psi_{320} + \psi_{230}\psi_{322} - \psi_{222}\psi_{330} -
      \psi_{220}\psi_{332})\nonumber\\\times (&&\psi_{013}\psi_{101} + \psi_{011}\psi_{103} - \psi_{003}\psi_{111} - \psi_{001}\psi_{113} +
      \psi_{033}\psi_{121} + \psi_{031}\psi_{123} - \psi_{023}\psi_{131} - \psi_{021}\psi_{133}\nonumber\\ &&+ \psi_{213}\psi_{301} +
      \psi_{211}\psi_{303} - \psi_{203}\psi_{311} - \psi_{201}\psi_{313} + \psi_{233}\psi_{321} + \psi_{231}\psi_{323} -
      \psi_{223}\psi_{331} - \psi_{221}\psi_{333}).    )tex"},
        {"I3d_Z1", R"tex(Z_1=&&(\psi_{001}\psi_{013}+ \psi_{021}\psi_{033}- \psi_{023}\psi_{031}- \psi_{003}\psi_{011}) (\psi_{102}\psi_{110}-
      \psi_{100}\psi_{112}+ \psi_{122}\psi_{130}- \psi_{120}\psi_{132})\nonumber\\&&
   + (\psi_{022}\psi_{031}+ \psi_{002}\psi_{011}- \psi_{001}\psi_{012}- \psi_{021}\psi_{032}) (\psi_{103}\psi_{110}-
      \psi_{100}\psi_{113}+ \psi_{123}\psi_{130}- \psi_{120}\psi_{133})\nonumber\\&&
   + (\psi_{003}\psi_{012}+ \psi_{020}\psi_{031}- \psi_{021}\psi_{030}- \psi_{002}\psi_{013}) (\psi_{101}\psi_{110}-
      \psi_{100}\psi_{111}- \psi_{123}\psi_{132}+ \psi_{122}\psi_{133})\nonumber\\&&
   + (\psi_{002}\psi_{033}+ \psi_{000}\psi_{031}- \psi_{003}\psi_{032}- \psi_{001}\psi_{030}) (\psi_{111}\psi_{120}-
      \psi_{110}\psi_{121}+ \psi_{113}\psi_{122}- \psi_{112}\psi_{123})\nonumber\\&&
   + (\psi_{000}\psi_{012}+ \psi_{020}\psi_{032}- \psi_{022}\psi_{030}- \psi_{002}\psi_{010}) (\psi_{103}\psi_{111}-
      \psi_{101}\psi_{113}+ \psi_{123}\psi_{131}- \psi_{121}\psi_{133})\nonumber\\&&
   + (\psi_{023}\psi_{030}+ \psi_{003}\psi_{010}- \psi_{020}\psi_{033}- \psi_{000}\psi_{013}) (\psi_{102}\psi_{111}-
      \psi_{101}\psi_{112}+ \psi_{122}\psi_{131}- \psi_{121}\psi_{132})\nonumber\\&&
   + (\psi_{021}\psi_{010}+ \psi_{023}\psi_{012}- \psi_{020}\psi_{011}- \psi_{022}\psi_{013}) (\psi_{101}\psi_{130}-
      \psi_{100}\psi_{131}+ \psi_{103}\psi_{132}- \psi_{102}\psi_{133})\nonumber\\&&
   + (\psi_{001}\psi_{010}+ \psi_{022}\psi_{033}- \psi_{000}\psi_{011}- \psi_{023}\psi_{032}) (\psi_{103}\psi_{112}-
      \psi_{102}\psi_{113}- \psi_{121}\psi_{130}+ \psi_{120}\psi_{131})\nonumber\\&&
   + (\psi_{011}\psi_{030}+ \psi_{013}\psi_{032}- \psi_{010}\psi_{031}- \psi_{012}\psi_{033}) (\psi_{101}\psi_{120}-
      \psi_{100}\psi_{121}+ \psi_{103}\psi_{122}- \psi_{102}\psi_{123})\nonumber\\&&
   + (\psi_{001}\psi_{020}+ \psi_{003}\psi_{022}- \psi_{000}\psi_{021}- \psi_{002}\psi_{023}) (\psi_{111}\psi_{130}-
      \psi_{110}\psi_{131}+ \psi_{113}\psi_{132}- \psi_{112}\psi_{133})\nonumber\\&&
   + (\psi_{121}\psi_{200}- \psi_{120}\psi_{201}+ \psi_{123}\psi_{202}- \psi_{122}\psi_{203}) (\psi_{330}\psi_{011}+
      \psi_{332}\psi_{013}- \psi_{333}\psi_{012}- \psi_{010}\psi_{331})\nonumber\\&&
   + (\psi_{131}\psi_{200}- \psi_{130}\psi_{201}+ \psi_{133}\psi_{202}- \psi_{132}\psi_{203}) (
     \psi_{321}\psi_{010}+ \psi_{323}\psi_{012}- \psi_{320}\psi_{011}- \psi_{322}\psi_{013})\nonumber\\&&
   + (\psi_{101}\psi_{200}- \psi_{100}\psi_{201}+ \psi_{103}\psi_{202}- \psi_{102}\psi_{203}) (\psi_{310}\psi_{011}+
      \psi_{312}\psi_{013}- \psi_{313}\psi_{012}- \psi_{311}\psi_{010})\nonumber\\&&
   + (\psi_{111}\psi_{210}- \psi_{110}\psi_{211}+ \psi_{113}\psi_{212}- \psi_{112}\psi_{213}) (\psi_{302}\psi_{003}+
      \psi_{300}\psi_{001}- \psi_{303}\psi_{002}- \psi_{301}\psi_{000})\nonumber\\&&
   + (\psi_{111}\psi_{201}- \psi_{101}\psi_{211}+ \psi_{131}\psi_{221}- \psi_{121}\psi_{231}) (\psi_{310}\psi_{000}+
      \psi_{330}\psi_{020}- \psi_{320}\psi_{030}- \psi_{300}\psi_{010})\nonumber\\&&
   + (\psi_{111}\psi_{202}- \psi_{101}\psi_{212}+ \psi_{131}\psi_{222}- \psi_{121}\psi_{232}) (\psi_{300}\psi_{013}+
      \psi_{320}\psi_{033}- \psi_{330}\psi_{023}- \psi_{310}\psi_{003})\nonumber\\&&
   + (\psi_{110}\psi_{202}- \psi_{100}\psi_{212}+ \psi_{130}\psi_{222}- \psi_{120}\psi_{232}) (\psi_{311}\psi_{003}+
      \psi_{331}\psi_{023}- \psi_{321}\psi_{033}- \psi_{301}\psi_{013})\nonumber\\&&
   + (\psi_{121}\psi_{210}- \psi_{120}\psi_{211}+ \psi_{123}\psi_{212}- \psi_{122}\psi_{213}) (\psi_{331}\psi_{000}+
      \psi_{333}\psi_{002}- \psi_{330}\psi_{001}- \psi_{332}\psi_{003})\nonumber\\&&
   + (\psi_{131}\psi_{210}- \psi_{130}\psi_{211}+ \psi_{133}\psi_{212}- \psi_{132}\psi_{213}) (\psi_{322}\psi_{003}+
      \psi_{320}\psi_{001}- \psi_{323}\psi_{002}- \psi_{321}\psi_{000})\nonumber\\&&
   + (\psi_{112}\psi_{202}- \psi_{102}\psi_{212}+ \psi_{132}\psi_{222}- \psi_{122}\psi_{232}) (\psi_{333}\psi_{023}+
      \psi_{313}\psi_{003}- \psi_{303}\psi_{013}- \psi_{323}\psi_{033})\nonumber\\&&
   + (\psi_{110}\psi_{200}- \psi_{100}\psi_{210}+ \psi_{130}\psi_{220}- \psi_{120}\psi_{230}) (\psi_{311}\psi_{001}+
      \psi_{331}\psi_{021}- \psi_{321}\psi_{031}- \psi_{301}\psi_{011})\nonumber\\&&
   + (\psi_{113}\psi_{201}- \psi_{103}\psi_{211}+ \psi_{133}\psi_{221}- \psi_{123}\psi_{231}) (\psi_{332}\psi_{020}+
      \psi_{312}\psi_{000}- \psi_{302}\psi_{010}- \psi_{322}\psi_{030})\nonumber\\&&
   + (\psi_{112}\psi_{201}- \psi_{102}\psi_{211}+ \psi_{132}\psi_{221}- \psi_{122}\psi_{231}) (\psi_{323}\psi_{030}+
      \psi_{303}\psi_{010}- \psi_{333}\psi_{020}- \psi_{313}\psi_{000})\nonumber\\&&
   + (\psi_{113}\psi_{200}- \psi_{103}\psi_{210}+ \psi_{133}\psi_{220}- \psi_{123}\psi_{230}) (\psi_{322}\psi_{031}+
      \psi_{302}\psi_{011}- \psi_{312}\psi_{001}- \psi_{332}\psi_{021})\nonumber\\&&
   + (\psi_{112}\psi_{200}- \psi_{102}\psi_{210}+ \psi_{132}\psi_{220}- \psi_{122}\psi_{230}) (\psi_{333}\psi_{021}+
      \psi_{313}\psi_{001}- \psi_{303}\psi_{011}- \psi_{323}\psi_{031})\nonumber\\&&
   + (\psi_{111}\psi_{230}- \psi_{110}\psi_{231}+ \psi_{113}\psi_{232}- \psi_{112}\psi_{233}) (
     \psi_{300}\psi_{021}+ \psi_{302}\psi_{023}- \psi_{303}\psi_{022}- \psi_{301}\psi_{020})\nonumber\\&&
   + (\psi_{101}\psi_{230}- \psi_{100}\psi_{231}+ \psi_{103}\psi_{232}- \psi_{102}\psi_{233}) (\psi_{313}\psi_{022}+
      \psi_{311}\psi_{020}- \psi_{312}\psi_{023}- \psi_{310}\psi_{021})\nonumber\\&&
   + (\psi_{131}\psi_{230}- \psi_{130}\psi_{231}+ \psi_{133}\psi_{232}- \psi_{132}\psi_{233}) (\psi_{320}\psi_{021}+
      \psi_{322}\psi_{023}- \psi_{321}\psi_{020}- \psi_{323}\psi_{022})\nonumber\\&&
   + (\psi_{111}\psi_{220}- \psi_{110}\psi_{221}+ \psi_{113}\psi_{222}- \psi_{112}\psi_{223}) (
     \psi_{303}\psi_{032}+ \psi_{301}\psi_{030}- \psi_{300}\psi_{031}- \psi_{302}\psi_{033})\nonumber\\&&
    + (\psi_{101}\psi_{220}- \psi_{100}\psi_{221}+ \psi_{103}\psi_{222}- \psi_{102}\psi_{223}) (\psi_{310}\psi_{031}+
      \psi_{312}\psi_{033}- \psi_{313}\psi_{032}- \psi_{311}\psi_{030})\nonumber\\&&
   + (\psi_{111}\psi_{203}- \psi_{101}\psi_{213}+ \psi_{131}\psi_{223}- \psi_{121}\psi_{233}) (\psi_{310}\psi_{002}+
      \psi_{330}\psi_{022}- \psi_{320}\psi_{032}- \psi_{300}\psi_{012})\nonumber\\&&
   + (\psi_{110}\psi_{203}- \psi_{100}\psi_{213}+ \psi_{130}\psi_{223}- \psi_{120}\psi_{233}) (\psi_{321}\psi_{032}+
      \psi_{301}\psi_{012}- \psi_{311}\psi_{002}- \psi_{331}\psi_{022})\nonumber\\&&
   + (\psi_{113}\psi_{203}- \psi_{103}\psi_{213}+ \psi_{133}\psi_{223}- \psi_{123}\psi_{233}) (\psi_{312}\psi_{002}+
      \psi_{332}\psi_{022}- \psi_{322}\psi_{032}- \psi_{302}\psi_{012})\nonumber\\&&
   + (\psi_{121}\psi_{220}- \psi_{120}\psi_{221}+ \psi_{123}\psi_{222}- \psi_{122}\psi_{223}) (\psi_{332}\psi_{033}+
      \psi_{330}\psi_{031}- \psi_{333}\psi_{032}- \psi_{331}\psi_{030})\nonumber\\&&
   + (\psi_{203}\psi_{212}+ \psi_{220}\psi_{231}- \psi_{221}\psi_{230}- \psi_{202}\psi_{213}) (\psi_{301}\psi_{310}-
      \psi_{300}\psi_{311}- \psi_{323}\psi_{332}+ \psi_{322}\psi_{333})\nonumber\\&&
   + (\psi_{201}\psi_{213}+ \psi_{221}\psi_{233}- \psi_{203}\psi_{211}- \psi_{223}\psi_{231}) (\psi_{302}\psi_{310}-
      \psi_{300}\psi_{312}+ \psi_{322}\psi_{330}- \psi_{320}\psi_{332})\nonumber\\&&
   + (\psi_{211}\psi_{230}- \psi_{210}\psi_{231}+ \psi_{213}\psi_{232}- \psi_{212}\psi_{233}) (\psi_{301}\psi_{320}-
      \psi_{300}\psi_{321}+ \psi_{303}\psi_{322}- \psi_{302}\psi_{323})\nonumber\\&&
   + (\psi_{223}\psi_{230}+ \psi_{203}\psi_{210}- \psi_{220}\psi_{233}- \psi_{200}\psi_{213}) (\psi_{302}\psi_{311}-
      \psi_{301}\psi_{312}+ \psi_{322}\psi_{331}- \psi_{321}\psi_{332})\nonumber\\&&
   + (\psi_{222}\psi_{231}+ \psi_{202}\psi_{211}- \psi_{221}\psi_{232}- \psi_{201}\psi_{212}) (\psi_{303}\psi_{310}-
      \psi_{300}\psi_{313}+ \psi_{323}\psi_{330}- \psi_{320}\psi_{333})\nonumber\\&&
   + (\psi_{200}\psi_{212}+ \psi_{220}\psi_{232}- \psi_{202}\psi_{210}- \psi_{222}\psi_{230}) (\psi_{303}\psi_{311}-
      \psi_{301}\psi_{313}+ \psi_{323}\psi_{331}- \psi_{321}\psi_{333})\nonumber\\&&
   + (\psi_{222}\psi_{233}+ \psi_{201}\psi_{210}- \psi_{223}\psi_{232}- \psi_{200}\psi_{211}) (\psi_{303}\psi_{312}-
      \psi_{302}\psi_{313}- \psi_{321}\psi_{330}+ \psi_{320}\psi_{331})\nonumber\\&&
   + (\psi_{200}\psi_{231}+ \psi_{202}\psi_{233}- \psi_{201}\psi_{230}- \psi_{203}\psi_{232}) (\psi_{311}\psi_{320}-
      \psi_{310}\psi_{321}+ \psi_{313}\psi_{322}- \psi_{312}\psi_{323})\nonumber\\&&
   + (\psi_{223}\psi_{212}+ \psi_{221}\psi_{210}- \psi_{220}\psi_{211}- \psi_{222}\psi_{213}) (
     \psi_{301}\psi_{330}- \psi_{300}\psi_{331}+ \psi_{303}\psi_{332}- \psi_{302}\psi_{333})\nonumber\\&&
   + (\psi_{203}\psi_{222}+ \psi_{220}\psi_{201}- \psi_{221}\psi_{200}- \psi_{202}\psi_{223}) (
     \psi_{311}\psi_{330}- \psi_{310}\psi_{331}+ \psi_{313}\psi_{332}- \psi_{312}\psi_{333}),)tex"},
        {"I3d_Z2", R"tex(   Z_2=&&\psi_{032}\psi_{323}(\psi_{112}\psi_{203}- \psi_{102}\psi_{213}+ \psi_{131}\psi_{220}- \psi_{130}\psi_{221}+
      \psi_{133}\psi_{222}- \psi_{122}\psi_{233})\nonumber\\&&
   + \psi_{022}\psi_{333}( \psi_{102}\psi_{213}-\psi_{112}\psi_{203}- \psi_{132}\psi_{223}+ \psi_{121}\psi_{230}-
      \psi_{120}\psi_{231}+ \psi_{123}\psi_{232})\nonumber\\&&
   + \psi_{010} \psi_{301}(\psi_{111}\psi_{200}+ \psi_{113}\psi_{202}- \psi_{112}\psi_{203}- \psi_{100}\psi_{211}+
      \psi_{130}\psi_{221}- \psi_{120}\psi_{231})\nonumber\\&&
   + \psi_{011}\psi_{300}(\psi_{110}\psi_{201}- \psi_{113}\psi_{202}+ \psi_{112}\psi_{203}- \psi_{101}\psi_{210}+
      \psi_{131}\psi_{220}- \psi_{121}\psi_{230})\nonumber\\&&
   + \psi_{012}\psi_{303}(\psi_{111}\psi_{200}- \psi_{110}\psi_{201}+ \psi_{113}\psi_{202}- \psi_{102}\psi_{213}+
      \psi_{132}\psi_{223}- \psi_{122}\psi_{233})\nonumber\\&&
   + \psi_{013}\psi_{302}(\psi_{110}\psi_{201}-\psi_{111}\psi_{200}+ \psi_{112}\psi_{203}- \psi_{103}\psi_{212}+
      \psi_{133}\psi_{222}- \psi_{123}\psi_{232})\nonumber\\&&
   + \psi_{001}\psi_{310}(\psi_{100}\psi_{211}-\psi_{111}\psi_{200}- \psi_{103}\psi_{212}+ \psi_{102}\psi_{213}-
      \psi_{131}\psi_{220}+ \psi_{121}\psi_{230})\nonumber\\&&
   + \psi_{031}\psi_{320}(\psi_{111}\psi_{200}- \psi_{101}\psi_{210}+ \psi_{130}\psi_{221}- \psi_{133}\psi_{222}+
      \psi_{132}\psi_{223}- \psi_{121}\psi_{230})\nonumber\\&&
   + \psi_{000}\psi_{311}(\psi_{101}\psi_{210}-\psi_{110}\psi_{201}+ \psi_{103}\psi_{212}- \psi_{102}\psi_{213}-
      \psi_{130}\psi_{221}+ \psi_{120}\psi_{231}) \nonumber\\&&
   + \psi_{021}\psi_{330}( \psi_{101}\psi_{210}-\psi_{111}\psi_{200}- \psi_{131}\psi_{220}+ \psi_{120}\psi_{231}-
      \psi_{123}\psi_{232}+ \psi_{122}\psi_{233})\nonumber\\&&
   + \psi_{020}\psi_{331}( \psi_{100}\psi_{211}-\psi_{110}\psi_{201}- \psi_{130}\psi_{221}+ \psi_{121}\psi_{230}+
      \psi_{123}\psi_{232}- \psi_{122}\psi_{233})\nonumber\\&&
   + \psi_{030}\psi_{321}(\psi_{110}\psi_{201}- \psi_{100}\psi_{211}+ \psi_{131}\psi_{220}+ \psi_{133}\psi_{222}-
      \psi_{132}\psi_{223}- \psi_{120}\psi_{231})\nonumber\\&&
   + \psi_{003}\psi_{312}(\psi_{100}\psi_{211}-\psi_{113}\psi_{202}- \psi_{101}\psi_{210}+ \psi_{102}\psi_{213}-
      \psi_{133}\psi_{222}+ \psi_{123}\psi_{232})\nonumber\\&&
   + \psi_{033}\psi_{322}(\psi_{113}\psi_{202}- \psi_{103}\psi_{212}- \psi_{131}\psi_{220}+ \psi_{130}\psi_{221}+
      \psi_{132}\psi_{223}- \psi_{123}\psi_{232}) \nonumber\\&&
   + \psi_{002}\psi_{313}(\psi_{101}\psi_{210}-\psi_{112}\psi_{203}- \psi_{100}\psi_{211}+ \psi_{103}\psi_{212}-
      \psi_{132}\psi_{223}+ \psi_{122}\psi_{233})\nonumber\\&&
   + \psi_{023}\psi_{332}(\psi_{103}\psi_{212}-\psi_{113}\psi_{202}- \psi_{133}\psi_{222}- \psi_{121}\psi_{230}+
      \psi_{120}\psi_{231}+ \psi_{122}\psi_{233}). )tex"},
        {"I23a", R"tex(   I_{23a} = -4 (&&\psi_{101}\psi_{110} - \psi_{100}\psi_{111}+ \psi_{103}\psi_{112}- \psi_{102}\psi_{113}+
      \psi_{121}\psi_{130} - \psi_{120}\psi_{131}+ \psi_{123}\psi_{132}- \psi_{122}\psi_{133}\nonumber\\&&+\psi_{301}\psi_{310} - \psi_{300}\psi_{311}+ \psi_{303}\psi_{312}- \psi_{302}\psi_{313}+
      \psi_{321}\psi_{330} - \psi_{320}\psi_{331}+ \psi_{323}\psi_{332}- \psi_{322}\psi_{333})\nonumber\\\times  (&&\psi_{011}\psi_{200} -
      \psi_{010}\psi_{201}+ \psi_{013}\psi_{202}- \psi_{012}\psi_{203}- \psi_{001}\psi_{210}+ \psi_{000}\psi_{211}-
      \psi_{003}\psi_{212}+ \psi_{002}\psi_{213}\nonumber\\&&+ \psi_{031}\psi_{220} - \psi_{030}\psi_{221}+ \psi_{033}\psi_{222}-
      \psi_{032}\psi_{223}- \psi_{021}\psi_{230}+ \psi_{020}\psi_{231}- \psi_{023}\psi_{232}+ \psi_{022}\psi_{233})\nonumber\\ -
   4 (&&\psi_{001}\psi_{010} - \psi_{000}\psi_{011}+ \psi_{003}\psi_{012}- \psi_{002}\psi_{013}+ \psi_{021}\psi_{030} -
      \psi_{020}\psi_{031}+ \psi_{023}\psi_{032}- \psi_{022}\psi_{033}\nonumber\\&&+\psi_{201}\psi_{210} - \psi_{200}\psi_{211}+ \psi_{203}\psi_{212}- \psi_{202}\psi_{213}+ \psi_{221}\psi_{230} -
      \psi_{220}\psi_{231}+ \psi_{223}\psi_{232}- \psi_{222}\psi_{233})\nonumber\\\times  (&&\psi_{111}\psi_{300} - \psi_{110}\psi_{301}+
      \psi_{113}\psi_{302}- \psi_{112}\psi_{303}- \psi_{101}\psi_{310}+ \psi_{100}\psi_{311}- \psi_{103}\psi_{312}+
      \psi_{102}\psi_{313}\nonumber\\&&+ \psi_{131}\psi_{320} - \psi_{130}\psi_{321}+ \psi_{133}\psi_{322}- \psi_{132}\psi_{323}-
      \psi_{121}\psi_{330}+ \psi_{120}\psi_{331}- \psi_{123}\psi_{332}+ \psi_{122}\psi_{333})\nonumber\\ -
   2 (&&\psi_{011}\psi_{100} - \psi_{010}\psi_{101}+ \psi_{013}\psi_{102}- \psi_{012}\psi_{103}- \psi_{001}\psi_{110}+
      \psi_{000}\psi_{111}- \psi_{003}\psi_{112}+ \psi_{002}\psi_{113}\nonumber\\&&+ \psi_{031}\psi_{120} - \psi_{030}\psi_{121}+
      \psi_{033}\psi_{122}- \psi_{032}\psi_{123}- \psi_{021}\psi_{130}+ \psi_{020}\psi_{131}- \psi_{023}\psi_{132}+
      \psi_{022}\psi_{133}\nonumber\\&&+\psi_{211}\psi_{300} - \psi_{210}\psi_{301}+ \psi_{213}\psi_{302}- \psi_{212}\psi_{303}-
      \psi_{201}\psi_{310}+ \psi_{200}\psi_{311}- \psi_{203}\psi_{312}+ \psi_{202}\psi_{313}\nonumber\\&&+ \psi_{231}\psi_{320} -
      \psi_{230}\psi_{321}+ \psi_{233}\psi_{322}- \psi_{232}\psi_{323}- \psi_{221}\psi_{330}+ \psi_{220}\psi_{331}-
      \psi_{223}\psi_{332}+ \psi_{222}\psi_{333}) \nonumber\\ \times (&&\psi_{111}\psi_{200} - \psi_{110}\psi_{201}+ \psi_{113}\psi_{202}- \psi_{112}\psi_{203}-
      \psi_{101}\psi_{210}+ \psi_{100}\psi_{211}- \psi_{103}\psi_{212}+ \psi_{102}\psi_{213}\nonumber\\&&+ \psi_{131}\psi_{220} -
      \psi_{130}\psi_{221}+ \psi_{133}\psi_{222}- \psi_{132}\psi_{223}- \psi_{121}\psi_{230}+ \psi_{120}\psi_{231}-
      \psi_{123}\psi_{232}+ \psi_{122}\psi_{233}\nonumber\\&&+\psi_{011}\psi_{300} - \psi_{010}\psi_{301}+ \psi_{013}\psi_{302}- \psi_{012}\psi_{303}-
      \psi_{001}\psi_{310}+ \psi_{000}\psi_{311}- \psi_{003}\psi_{312}+ \psi_{002}\psi_{313}\nonumber\\&&+ \psi_{031}\psi_{320} -
      \psi_{030}\psi_{321}+ \psi_{033}\psi_{322}- \psi_{032}\psi_{323}- \psi_{021}\psi_{330}+ \psi_{020}\psi_{331}-
      \psi_{023}\psi_{332}+ \psi_{022}\psi_{333}). )tex"},
        {"I35a", R"tex(         I_{35a} =  -
   4 (&&\psi_{001}\psi_{010}- \psi_{000}\psi_{011}+ \psi_{003}\psi_{012}- \psi_{002}\psi_{013}+ \psi_{021}\psi_{030}-
      \psi_{020}\psi_{031}+ \psi_{023}\psi_{032}- \psi_{022}\psi_{033})\nonumber\\\times(&&\psi_{113}\psi_{120}- \psi_{112}\psi_{121}+
      \psi_{111}\psi_{122}- \psi_{110}\psi_{123}- \psi_{103}\psi_{130}+ \psi_{102}\psi_{131}- \psi_{101}\psi_{132}+
      \psi_{100}\psi_{133})\nonumber\\ -
   4 (&&\psi_{013}\psi_{020}- \psi_{012}\psi_{021}+ \psi_{011}\psi_{022}- \psi_{010}\psi_{023}- \psi_{003}\psi_{030}+
      \psi_{002}\psi_{031}- \psi_{001}\psi_{032}+ \psi_{000}\psi_{033})\nonumber\\\times (&&\psi_{101}\psi_{110}- \psi_{100}\psi_{111}+
      \psi_{103}\psi_{112}- \psi_{102}\psi_{113}+ \psi_{121}\psi_{130}- \psi_{120}\psi_{131}+ \psi_{123}\psi_{132}-
      \psi_{122}\psi_{133})\nonumber\\ -
   4 (&&\psi_{201}\psi_{210}- \psi_{200}\psi_{211}+ \psi_{203}\psi_{212}- \psi_{202}\psi_{213}+ \psi_{221}\psi_{230}-
      \psi_{220}\psi_{231}+ \psi_{223}\psi_{232}- \psi_{222}\psi_{233})\nonumber\\\times (&&\psi_{313}\psi_{320}- \psi_{312}\psi_{321}+
      \psi_{311}\psi_{322}- \psi_{310}\psi_{323}- \psi_{303}\psi_{330}+ \psi_{302}\psi_{331}- \psi_{301}\psi_{332}+
      \psi_{300}\psi_{333})\nonumber\\ -
   4 (&&\psi_{213}\psi_{220}- \psi_{212}\psi_{221}+ \psi_{211}\psi_{222}- \psi_{210}\psi_{223}- \psi_{203}\psi_{230}+
      \psi_{202}\psi_{231}- \psi_{201}\psi_{232}+ \psi_{200}\psi_{233})\nonumber\\\times (&&\psi_{301}\psi_{310}- \psi_{300}\psi_{311}+
      \psi_{303}\psi_{312}- \psi_{302}\psi_{313}+ \psi_{321}\psi_{330}- \psi_{320}\psi_{331}+ \psi_{323}\psi_{332}-
      \psi_{322}\psi_{333})\nonumber\\-2 (&&\psi_{033}\psi_{100}- \psi_{032}\psi_{101}+ \psi_{031}\psi_{102}- \psi_{030}\psi_{103}-
      \psi_{023}\psi_{110}+ \psi_{022}\psi_{111}- \psi_{021}\psi_{112}+ \psi_{020}\psi_{113}\nonumber\\&&+ \psi_{013}\psi_{120}-
      \psi_{012}\psi_{121}+ \psi_{011}\psi_{122}- \psi_{010}\psi_{123}- \psi_{003}\psi_{130}+ \psi_{002}\psi_{131}-
      \psi_{001}\psi_{132}+ \psi_{000}\psi_{133})\nonumber\\\times (&&\psi_{011}\psi_{100}- \psi_{010}\psi_{101}+ \psi_{013}\psi_{102}-
      \psi_{012}\psi_{103}- \psi_{001}\psi_{110}+ \psi_{000}\psi_{111}- \psi_{003}\psi_{112}+ \psi_{002}\psi_{113}\nonumber\\&&+
      \psi_{031}\psi_{120}- \psi_{030}\psi_{121}+ \psi_{033}\psi_{122}- \psi_{032}\psi_{123}- \psi_{021}\psi_{130}+
      \psi_{020}\psi_{131}- \psi_{023}\psi_{132}+ \psi_{022}\psi_{133})\nonumber\\ -
   2 (&&\psi_{111}\psi_{200}- \psi_{110}\psi_{201}+ \psi_{113}\psi_{202}- \psi_{112}\psi_{203}- \psi_{101}\psi_{210}+
      \psi_{100}\psi_{211}- \psi_{103}\psi_{212}+ \psi_{102}\psi_{213}\nonumber\\&&+ \psi_{131}\psi_{220}- \psi_{130}\psi_{221}+
      \psi_{133}\psi_{222}- \psi_{132}\psi_{223}- \psi_{121}\psi_{230}+ \psi_{120}\psi_{231}- \psi_{123}\psi_{232}+
      \psi_{122}\psi_{233})\nonumber\\\times (&&\psi_{033}\psi_{300}- \psi_{032}\psi_{301}+ \psi_{031}\psi_{302}- \psi_{030}\psi_{303}-
      \psi_{023}\psi_{310}+ \psi_{022}\psi_{311}- \psi_{021}\psi_{312}+ \psi_{020}\psi_{313}\nonumber\\&&+ \psi_{013}\psi_{320}-
      \psi_{012}\psi_{321}+ \psi_{011}\psi_{322}- \psi_{010}\psi_{323}- \psi_{003}\psi_{330}+ \psi_{002}\psi_{331}-
      \psi_{001}\psi_{332}+ \psi_{000}\psi_{333})\nonumber\\ -
   2 (&&\psi_{133}\psi_{200}- \psi_{132}\psi_{201}+ \psi_{131}\psi_{202}- \psi_{130}\psi_{203}- \psi_{123}\psi_{210}+
      \psi_{122}\psi_{211}- \psi_{121}\psi_{212}+ \psi_{120}\psi_{213}\nonumber\\&&+ \psi_{113}\psi_{220}- \psi_{112}\psi_{221}+
      \psi_{111}\psi_{222}- \psi_{110}\psi_{223}- \psi_{103}\psi_{230}+ \psi_{102}\psi_{231}- \psi_{101}\psi_{232}+
      \psi_{100}\psi_{233})\nonumber\\\times (&&\psi_{011}\psi_{300}- \psi_{010}\psi_{301}+ \psi_{013}\psi_{302}- \psi_{012}\psi_{303}-
      \psi_{001}\psi_{310}+ \psi_{000}\psi_{311}- \psi_{003}\psi_{312}+ \psi_{002}\psi_{313}\nonumber\\&&+ \psi_{031}\psi_{320}-
      \psi_{030}\psi_{321}+ \psi_{033}\psi_{322}- \psi_{032}\psi_{323}- \psi_{021}\psi_{330}+ \psi_{020}\psi_{331}-
      \psi_{023}\psi_{332}+ \psi_{022}\psi_{333})\nonumber\\ +
   2 (&&\psi_{011}\psi_{200}- \psi_{010}\psi_{201}+ \psi_{013}\psi_{202}- \psi_{012}\psi_{203}- \psi_{001}\psi_{210}+
      \psi_{000}\psi_{211}- \psi_{003}\psi_{212}+ \psi_{002}\psi_{213}\nonumber\\&&+ \psi_{031}\psi_{220}- \psi_{030}\psi_{221}+
      \psi_{033}\psi_{222}- \psi_{032}\psi_{223}- \psi_{021}\psi_{230}+ \psi_{020}\psi_{231}- \psi_{023}\psi_{232}+
      \psi_{022}\psi_{233})\nonumber\\\times (&&\psi_{133}\psi_{300}- \psi_{132}\psi_{301}+ \psi_{131}\psi_{302}- \psi_{130}\psi_{303}-
      \psi_{123}\psi_{310}+ \psi_{122}\psi_{311}- \psi_{121}\psi_{312}+ \psi_{120}\psi_{313}\nonumber\\&&+ \psi_{113}\psi_{320}-
      \psi_{112}\psi_{321}+ \psi_{111}\psi_{322}- \psi_{110}\psi_{323}- \psi_{103}\psi_{330}+ \psi_{102}\psi_{331}-
      \psi_{101}\psi_{332}+ \psi_{100}\psi_{333})\nonumber\\ +
   2 (&&\psi_{033}\psi_{200}- \psi_{032}\psi_{201}+ \psi_{031}\psi_{202}- \psi_{030}\psi_{203}- \psi_{023}\psi_{210}+
      \psi_{022}\psi_{211}- \psi_{021}\psi_{212}+ \psi_{020}\psi_{213}\nonumber\\&&+ \psi_{013}\psi_{220}- \psi_{012}\psi_{221}+
      \psi_{011}\psi_{222}- \psi_{010}\psi_{223}- \psi_{003}\psi_{230}+ \psi_{002}\psi_{231}- \psi_{001}\psi_{232}+
      \psi_{000}\psi_{233})\nonumber\\\times (&&\psi_{111}\psi_{300}- \psi_{110}\psi_{301}+ \psi_{113}\psi_{302}- \psi_{112}\psi_{303}-
      \psi_{101}\psi_{310}+ \psi_{100}\psi_{311}- \psi_{103}\psi_{312}+ \psi_{102}\psi_{313}\nonumber\\&&+ \psi_{131}\psi_{320}-
      \psi_{130}\psi_{321}+ \psi_{133}\psi_{322}- \psi_{132}\psi_{323}- \psi_{121}\psi_{330}+ \psi_{120}\psi_{331}-
      \psi_{123}\psi_{332}+ \psi_{122}\psi_{333})\nonumber\\ -
   2 (&&\psi_{233}\psi_{300}- \psi_{232}\psi_{301}+ \psi_{231}\psi_{302}- \psi_{230}\psi_{303}- \psi_{223}\psi_{310}+
      \psi_{222}\psi_{311}- \psi_{221}\psi_{312}+ \psi_{220}\psi_{313}\nonumber\\&&+ \psi_{213}\psi_{320}- \psi_{212}\psi_{321}+
      \psi_{211}\psi_{322}- \psi_{210}\psi_{323}- \psi_{203}\psi_{330}+ \psi_{202}\psi_{331}- \psi_{201}\psi_{332}+
      \psi_{200}\psi_{333})\nonumber\\\times (&&\psi_{211}\psi_{300}- \psi_{210}\psi_{301}+ \psi_{213}\psi_{302}- \psi_{212}\psi_{303}-
      \psi_{201}\psi_{310}+ \psi_{200}\psi_{311}- \psi_{203}\psi_{312}+ \psi_{202}\psi_{313}\nonumber\\&&+ \psi_{231}\psi_{320}-
      \psi_{230}\psi_{321}+ \psi_{233}\psi_{322}- \psi_{232}\psi_{323}- \psi_{221}\psi_{330}+ \psi_{220}\psi_{331}-
      \psi_{223}\psi_{332}+ \psi_{222}\psi_{333}).)tex"},
        {"I11a", R"tex(      I_{11a} = -2 (&&\psi_{101}\psi_{110}- \psi_{100}\psi_{111}+ \psi_{103}\psi_{112}- \psi_{102}\psi_{113}+
       \psi_{121}\psi_{130}- \psi_{120}\psi_{131}+ \psi_{123}\psi_{132}- \psi_{122}\psi_{133}\nonumber\\&& + \psi_{301}\psi_{310}-
       \psi_{300}\psi_{311}+ \psi_{303}\psi_{312}- \psi_{302}\psi_{313}+ \psi_{321}\psi_{330}- \psi_{320}\psi_{331}+
       \psi_{323}\psi_{332}- \psi_{322}\psi_{333})\nonumber\\\times  (&&\psi_{033}\psi_{200}- \psi_{032}\psi_{201}+ \psi_{031}\psi_{202}-
     \psi_{030}\psi_{203}- \psi_{023}\psi_{210}+ \psi_{022}\psi_{211}- \psi_{021}\psi_{212}+ \psi_{020}\psi_{213}\nonumber\\&&+
     \psi_{013}\psi_{220}- \psi_{012}\psi_{221}+ \psi_{011}\psi_{222}- \psi_{010}\psi_{223}- \psi_{003}\psi_{230}+
     \psi_{002}\psi_{231}- \psi_{001}\psi_{232}+ \psi_{000}\psi_{233})\nonumber\\ +
  2 (&&\psi_{113}\psi_{120}- \psi_{112}\psi_{121}+ \psi_{111}\psi_{122}- \psi_{110}\psi_{123}- \psi_{103}\psi_{130}+
       \psi_{102}\psi_{131}- \psi_{101}\psi_{132}+ \psi_{100}\psi_{133}\nonumber\\&& +  \psi_{313}\psi_{320}- \psi_{312}\psi_{321}+
       \psi_{311}\psi_{322}- \psi_{310}\psi_{323}- \psi_{303}\psi_{330}+ \psi_{302}\psi_{331}- \psi_{301}\psi_{332}+
       \psi_{300}\psi_{333})\nonumber\\\times  (&&\psi_{011}\psi_{200}- \psi_{010}\psi_{201}+ \psi_{013}\psi_{202}- \psi_{012}\psi_{203}-
     \psi_{001}\psi_{210}+ \psi_{000}\psi_{211}- \psi_{003}\psi_{212}+ \psi_{002}\psi_{213}\nonumber\\&&+ \psi_{031}\psi_{220}-
     \psi_{030}\psi_{221}+ \psi_{033}\psi_{222}- \psi_{032}\psi_{223}- \psi_{021}\psi_{230}+ \psi_{020}\psi_{231}-
     \psi_{023}\psi_{232}+
     \psi_{022}\psi_{233})\nonumber\\ -
  2 (&& \psi_{001}\psi_{010}- \psi_{000}\psi_{011}+ \psi_{003}\psi_{012}- \psi_{002}\psi_{013}+ \psi_{021}\psi_{030}-
        \psi_{020}\psi_{031}+ \psi_{023}\psi_{032}- \psi_{022}\psi_{033}\nonumber\\&& + \psi_{201}\psi_{210}- \psi_{200}\psi_{211}+
       \psi_{203}\psi_{212}- \psi_{202}\psi_{213}+ \psi_{221}\psi_{230}- \psi_{220}\psi_{231}+ \psi_{223}\psi_{232}-
       \psi_{222}\psi_{233} )\nonumber\\\times  (&&\psi_{133}\psi_{300}- \psi_{132}\psi_{301}+ \psi_{131}\psi_{302}- \psi_{130}\psi_{303}-
     \psi_{123}\psi_{310}+ \psi_{122}\psi_{311}- \psi_{121}\psi_{312}+ \psi_{120}\psi_{313}\nonumber\\&&+ \psi_{113}\psi_{320}-
     \psi_{112}\psi_{321}+ \psi_{111}\psi_{322}- \psi_{110}\psi_{323}- \psi_{103}\psi_{330}+ \psi_{102}\psi_{331}-
     \psi_{101}\psi_{332}+ \psi_{100}\psi_{333})\nonumber\\ +
  2 (&& \psi_{013}\psi_{020}- \psi_{012}\psi_{021}+ \psi_{011}\psi_{022}- \psi_{010}\psi_{023}- \psi_{003}\psi_{030}+
       \psi_{002}\psi_{031}- \psi_{001}\psi_{032}+ \psi_{000}\psi_{033}\nonumber\\&& + \psi_{213}\psi_{220}- \psi_{212}\psi_{221}+
       \psi_{211}\psi_{222}- \psi_{210}\psi_{223}- \psi_{203}\psi_{230}+ \psi_{202}\psi_{231}- \psi_{201}\psi_{232}+
       \psi_{200}\psi_{233} )\nonumber\\\times  (&&\psi_{111}\psi_{300}- \psi_{110}\psi_{301}+ \psi_{113}\psi_{302}- \psi_{112}\psi_{303}-
     \psi_{101}\psi_{310}+ \psi_{100}\psi_{311}- \psi_{103}\psi_{312}+ \psi_{102}\psi_{313}\nonumber\\&&+ \psi_{131}\psi_{320}-
     \psi_{130}\psi_{321}+ \psi_{133}\psi_{322}- \psi_{132}\psi_{323}- \psi_{121}\psi_{330}+ \psi_{120}\psi_{331}-
     \psi_{123}\psi_{332}+ \psi_{122}\psi_{333})\nonumber\\ - (&&\psi_{011}\psi_{100}- \psi_{010}\psi_{101}+ \psi_{013}\psi_{102}- \psi_{012}\psi_{103}-
       \psi_{001}\psi_{110}+ \psi_{000}\psi_{111}- \psi_{003}\psi_{112}+ \psi_{002}\psi_{113}\nonumber\\&&+ \psi_{031}\psi_{120}-
       \psi_{030}\psi_{121}+ \psi_{033}\psi_{122}- \psi_{032}\psi_{123}- \psi_{021}\psi_{130}+ \psi_{020}\psi_{131}-
       \psi_{023}\psi_{132}+ \psi_{022}\psi_{133}\nonumber\\&& + \psi_{211}\psi_{300}- \psi_{210}\psi_{301}+ \psi_{213}\psi_{302}-
       \psi_{212}\psi_{303}- \psi_{201}\psi_{310}+ \psi_{200}\psi_{311}- \psi_{203}\psi_{312}+ \psi_{202}\psi_{313}\nonumber\\&&+
       \psi_{231}\psi_{320}- \psi_{230}\psi_{321}+ \psi_{233}\psi_{322}- \psi_{232}\psi_{323}- \psi_{221}\psi_{330}+
       \psi_{220}\psi_{331}- \psi_{223}\psi_{332}+ \psi_{222}\psi_{333}) \nonumber\\\times (&&\psi_{133}\psi_{200}- \psi_{132}\psi_{201}+
       \psi_{131}\psi_{202}- \psi_{130}\psi_{203}- \psi_{123}\psi_{210}+ \psi_{122}\psi_{211}- \psi_{121}\psi_{212}+
       \psi_{120}\psi_{213}\nonumber\\&&+ \psi_{113}\psi_{220}- \psi_{112}\psi_{221}+ \psi_{111}\psi_{222}- \psi_{110}\psi_{223}-
       \psi_{103}\psi_{230}+ \psi_{102}\psi_{231}- \psi_{101}\psi_{232}+ \psi_{100}\psi_{233}\nonumber\\&& + \psi_{033}\psi_{300}-
       \psi_{032}\psi_{301}+ \psi_{031}\psi_{302}- \psi_{030}\psi_{303}- \psi_{023}\psi_{310}+ \psi_{022}\psi_{311}-
       \psi_{021}\psi_{312}+ \psi_{020}\psi_{313}\nonumber\\&&+ \psi_{013}\psi_{320}- \psi_{012}\psi_{321}+ \psi_{011}\psi_{322}-
       \psi_{010}\psi_{323}- \psi_{003}\psi_{330}+ \psi_{002}\psi_{331}- \psi_{001}\psi_{332}+
       \psi_{000}\psi_{333})\nonumber\\ - (&&\psi_{033}\psi_{100}- \psi_{032}\psi_{101}+ \psi_{031}\psi_{102}- \psi_{030}\psi_{103}-
        \psi_{023}\psi_{110}+ \psi_{022}\psi_{111}- \psi_{021}\psi_{112}+ \psi_{020}\psi_{113}\nonumber\\&&+ \psi_{013}\psi_{120}-
       \psi_{012}\psi_{121}+ \psi_{011}\psi_{122}- \psi_{010}\psi_{123}- \psi_{003}\psi_{130}+ \psi_{002}\psi_{131}-
       \psi_{001}\psi_{132}+ \psi_{000}\psi_{133}\nonumber\\&& + \psi_{233}\psi_{300}- \psi_{232}\psi_{301}+ \psi_{231}\psi_{302}-
       \psi_{230}\psi_{303}- \psi_{223}\psi_{310}+ \psi_{222}\psi_{311}- \psi_{221}\psi_{312}+ \psi_{220}\psi_{313}\nonumber\\&&+
       \psi_{213}\psi_{320}- \psi_{212}\psi_{321}+ \psi_{211}\psi_{322}- \psi_{210}\psi_{323}- \psi_{203}\psi_{330}+
       \psi_{202}\psi_{331}- \psi_{201}\psi_{332}+ \psi_{200}\psi_{333})\nonumber\\\times ( && \psi_{111}\psi_{200}- \psi_{110}\psi_{201}+
       \psi_{113}\psi_{202}- \psi_{112}\psi_{203}- \psi_{101}\psi_{210}+ \psi_{100}\psi_{211}- \psi_{103}\psi_{212}+
       \psi_{102}\psi_{213}\nonumber\\&&+ \psi_{131}\psi_{220}- \psi_{130}\psi_{221}+ \psi_{133}\psi_{222}- \psi_{132}\psi_{223}-
       \psi_{121}\psi_{230}+ \psi_{120}\psi_{231}- \psi_{123}\psi_{232}+ \psi_{122}\psi_{233}\nonumber\\&& + \psi_{011}\psi_{300}-
       \psi_{010}\psi_{301}+ \psi_{013}\psi_{302}- \psi_{012}\psi_{303}- \psi_{001}\psi_{310}+ \psi_{000}\psi_{311}-
       \psi_{003}\psi_{312}+ \psi_{002}\psi_{313}\nonumber\\&&+ \psi_{031}\psi_{320}- \psi_{030}\psi_{321}+ \psi_{033}\psi_{322}-
       \psi_{032}\psi_{323}- \psi_{021}\psi_{330}+ \psi_{020}\psi_{331}- \psi_{023}\psi_{332}+ \psi_{022}\psi_{333}).)tex"},
        {"H_a", R"tex( H_a =2(&&-\psi_{ 0111}\psi_{ 1000} + \psi_{ 0110}\psi_{ 1001} - \psi_{ 0113}\psi_{ 1002} +
   \psi_{ 0112}\psi_{ 1003} + \psi_{ 0101}\psi_{ 1010} - \psi_{ 0100}\psi_{ 1011} + \psi_{ 0103}\psi_{ 1012} -
   \psi_{ 0102}\psi_{ 1013}\nonumber\\&& - \psi_{ 0131}\psi_{ 1020 }+ \psi_{ 0130}\psi_{ 1021} - \psi_{ 0133}\psi_{ 1022 }+
   \psi_{ 0132}\psi_{ 1023} +  \psi_{0121} \psi_{1030} - \psi_{0120} \psi_{1031} + \psi_{0123} \psi_{1032} -
    \psi_{0122} \psi_{1033}\nonumber\\&& +  \psi_{0011} \psi_{1100} -  \psi_{0010 }\psi_{1101} +  \psi_{0013} \psi_{1102} -
    \psi_{0012} \psi_{1103} -  \psi_{0001} \psi_{1110 }+  \psi_{0000} \psi_{1111 }-  \psi_{0003} \psi_{1112} +
   \psi_{ 0002}\psi_{ 1113}\nonumber\\&& + \psi_{ 0031}\psi_{ 1120} - \psi_{ 0030 }\psi_{ 1121} + \psi_{ 0033}\psi_{ 1122} -
   \psi_{ 0032}\psi_{ 1123 }- \psi_{ 0021}\psi_{ 1130} + \psi_{ 0020}\psi_{ 1131} - \psi_{ 0023}\psi_{ 1132} +
   \psi_{ 0022}\psi_{ 1133}\nonumber\\&& -  \psi_{0311} \psi_{1200} +  \psi_{0310 }\psi_{1201} -  \psi_{0313 }\psi_{1202} +
    \psi_{0312} \psi_{1203} +  \psi_{0301} \psi_{1210} -  \psi_{0300} \psi_{1211} +  \psi_{0303} \psi_{1212} -
    \psi_{0302} \psi_{1213}\nonumber\\&& -  \psi_{0331 }\psi_{1220} +  \psi_{0330} \psi_{1221} -  \psi_{0333} \psi_{1222} +
    \psi_{0332} \psi_{1223} +  \psi_{0321} \psi_{1230} -  \psi_{0320 }\psi_{1231 }+  \psi_{0323 }\psi_{1232 }-
    \psi_{0322} \psi_{1233}\nonumber\\&& +  \psi_{0211} \psi_{1300} -  \psi_{0210 }\psi_{1301} +  \psi_{0213 }\psi_{1302} -
    \psi_{0212} \psi_{1303} -  \psi_{0201} \psi_{1310} +  \psi_{0200} \psi_{1311} - \psi_{0203 }\psi_{1312} +
    \psi_{0202} \psi_{1313}\nonumber\\&& +  \psi_{0231} \psi_{1320} -  \psi_{0230} \psi_{1321 }+  \psi_{0233} \psi_{1322} -
    \psi_{0232} \psi_{1323} -  \psi_{0221} \psi_{1330 }+  \psi_{0220} \psi_{1331 }- \psi_{0223 }\psi_{1332} +
    \psi_{0222} \psi_{1333}\nonumber\\&& -  \psi_{2111} \psi_{3000} +  \psi_{2110} \psi_{3001 }-  \psi_{2113 }\psi_{3002} +
    \psi_{2112} \psi_{3003} +  \psi_{2101} \psi_{3010} -  \psi_{2100} \psi_{3011} +  \psi_{2103} \psi_{3012} -
    \psi_{2102} \psi_{3013}\nonumber\\&& -  \psi_{2131} \psi_{3020} +  \psi_{2130 }\psi_{3021} -  \psi_{2133} \psi_{3022} +
    \psi_{2132} \psi_{3023} +  \psi_{2121} \psi_{3030} -  \psi_{2120} \psi_{3031 }+  \psi_{2123} \psi_{3032} -
    \psi_{2122} \psi_{3033}\nonumber\\&& +  \psi_{2011} \psi_{3100} -  \psi_{2010 }\psi_{3101 }+  \psi_{2013 }\psi_{3102} -
    \psi_{2012} \psi_{3103} -  \psi_{2001} \psi_{3110} +  \psi_{2000 }\psi_{3111} -  \psi_{2003} \psi_{3112} +
    \psi_{2002} \psi_{3113}\nonumber\\&& +  \psi_{2031} \psi_{3120} -  \psi_{2030} \psi_{3121} +  \psi_{2033 }\psi_{3122 }-
    \psi_{2032} \psi_{3123} -  \psi_{2021} \psi_{3130 }+  \psi_{2020} \psi_{3131 }-  \psi_{2023} \psi_{3132 }+
    \psi_{2022} \psi_{3133}\nonumber\\&& -  \psi_{2311} \psi_{3200} +  \psi_{2310} \psi_{3201} -  \psi_{2313} \psi_{3202} +
    \psi_{2312} \psi_{3203} +  \psi_{2301} \psi_{3210 }-  \psi_{2300 }\psi_{3211} +  \psi_{2303} \psi_{3212} -
    \psi_{2302} \psi_{3213}\nonumber\\&& -  \psi_{2331} \psi_{3220} +  \psi_{2330} \psi_{3221} -  \psi_{2333} \psi_{3222} +
    \psi_{2332} \psi_{3223} +  \psi_{2321} \psi_{3230 }-  \psi_{2320} \psi_{3231} +  \psi_{2323 }\psi_{3232} -
    \psi_{2322} \psi_{3233}\nonumber\\&& +  \psi_{2211} \psi_{3300} - \psi_{2210} \psi_{3301} +  \psi_{2213} \psi_{3302} -
    \psi_{2212} \psi_{3303} -  \psi_{2201} \psi_{3310} +  \psi_{2200 }\psi_{3311 }-  \psi_{2203 }\psi_{3312} +
    \psi_{2202} \psi_{3313}\nonumber\\&& +  \psi_{2231} \psi_{3320} -  \psi_{2230} \psi_{3321} +  \psi_{2233} \psi_{3322} -
    \psi_{2232} \psi_{3323} -  \psi_{2221} \psi_{3330} + \psi_{2220 }\psi_{3331} -  \psi_{2223 }\psi_{3332 }+
    \psi_{2222 }\psi_{3333}),)tex"},
        {"H_b", R"tex( H_b =2( &&\psi_{1333}\psi_{2000}- \psi_{1332}\psi_{2001}+ \psi_{1331}\psi_{2002}-
   \psi_{1330}\psi_{2003}- \psi_{1323}\psi_{2010}+ \psi_{1322}\psi_{2011}- \psi_{1321}\psi_{2012}+
   \psi_{1320}\psi_{2013}\nonumber\\&&+ \psi_{1313}\psi_{2020}- \psi_{1312}\psi_{2021}+ \psi_{1311}\psi_{2022}-
   \psi_{1310}\psi_{2023}- \psi_{1303}\psi_{2030}+ \psi_{1302}\psi_{2031}- \psi_{1301}\psi_{2032}+
   \psi_{1300}\psi_{2033}\nonumber\\&&- \psi_{1233}\psi_{2100}+ \psi_{1232}\psi_{2101}- \psi_{1231}\psi_{2102}+
   \psi_{1230}\psi_{2103}+ \psi_{1223}\psi_{2110}- \psi_{1222}\psi_{2111}+ \psi_{1221}\psi_{2112}-
   \psi_{1220}\psi_{2113}\nonumber\\&&- \psi_{1213}\psi_{2120}+ \psi_{1212}\psi_{2121}- \psi_{1211}\psi_{2122}+
   \psi_{1210}\psi_{2123}+ \psi_{1203}\psi_{2130}- \psi_{1202}\psi_{2131}+ \psi_{1201}\psi_{2132}-
   \psi_{1200}\psi_{2133}\nonumber\\&&+ \psi_{1133}\psi_{2200}- \psi_{1132}\psi_{2201}+ \psi_{1131}\psi_{2202}-
   \psi_{1130}\psi_{2203}- \psi_{1123}\psi_{2210}+ \psi_{1122}\psi_{2211}- \psi_{1121}\psi_{2212}+
   \psi_{1120}\psi_{2213}\nonumber\\&&+ \psi_{1113}\psi_{2220}- \psi_{1112}\psi_{2221}+ \psi_{1111}\psi_{2222}-
   \psi_{1110}\psi_{2223}- \psi_{1103}\psi_{2230}+ \psi_{1102}\psi_{2231}- \psi_{1101}\psi_{2232}+
   \psi_{1100}\psi_{2233}\nonumber\\&&- \psi_{1033}\psi_{2300}+ \psi_{1032}\psi_{2301}- \psi_{1031}\psi_{2302}+
   \psi_{1030}\psi_{2303}+ \psi_{1023}\psi_{2310}- \psi_{1022}\psi_{2311}+ \psi_{1021}\psi_{2312}-
   \psi_{1020}\psi_{2313}\nonumber\\&&- \psi_{1013}\psi_{2320}+ \psi_{1012}\psi_{2321}- \psi_{1011}\psi_{2322}+
   \psi_{1010}\psi_{2323}+ \psi_{1003}\psi_{2330}- \psi_{1002}\psi_{2331}+ \psi_{1001}\psi_{2332}-
   \psi_{1000}\psi_{2333}\nonumber\\&&- \psi_{0333}\psi_{3000}+ \psi_{0332}\psi_{3001}- \psi_{0331}\psi_{3002}+
   \psi_{0330}\psi_{3003}+ \psi_{0323}\psi_{3010}- \psi_{0322}\psi_{3011}+ \psi_{0321}\psi_{3012}-
   \psi_{0320}\psi_{3013}\nonumber\\&&- \psi_{0313}\psi_{3020}+ \psi_{0312}\psi_{3021}- \psi_{0311}\psi_{3022}+
   \psi_{0310}\psi_{3023}+ \psi_{0303}\psi_{3030}- \psi_{0302}\psi_{3031}+ \psi_{0301}\psi_{3032}-
   \psi_{0300}\psi_{3033}\nonumber\\&&+ \psi_{0233}\psi_{3100}- \psi_{0232}\psi_{3101}+ \psi_{0231}\psi_{3102}-
   \psi_{0230}\psi_{3103}- \psi_{0223}\psi_{3110}+ \psi_{0222}\psi_{3111}- \psi_{0221}\psi_{3112}+
   \psi_{0220}\psi_{3113}\nonumber\\&&+ \psi_{0213}\psi_{3120}- \psi_{0212}\psi_{3121}+ \psi_{0211}\psi_{3122}-
   \psi_{0210}\psi_{3123}- \psi_{0203}\psi_{3130}+ \psi_{0202}\psi_{3131}- \psi_{0201}\psi_{3132}+
   \psi_{0200}\psi_{3133}\nonumber\\&&- \psi_{0133}\psi_{3200}+ \psi_{0132}\psi_{3201}- \psi_{0131}\psi_{3202}+
   \psi_{0130}\psi_{3203}+ \psi_{0123}\psi_{3210}- \psi_{0122}\psi_{3211}+ \psi_{0121}\psi_{3212}-
   \psi_{0120}\psi_{3213}\nonumber\\&&- \psi_{0113}\psi_{3220}+ \psi_{0112}\psi_{3221}- \psi_{0111}\psi_{3222}+
   \psi_{0110}\psi_{3223}+ \psi_{0103}\psi_{3230}- \psi_{0102}\psi_{3231}+ \psi_{0101}\psi_{3232}-
   \psi_{0100}\psi_{3233}\nonumber\\&&+ \psi_{0033}\psi_{3300}- \psi_{0032}\psi_{3301}+ \psi_{0031}\psi_{3302}-
   \psi_{0030}\psi_{3303}- \psi_{0023}\psi_{3310}+ \psi_{0022}\psi_{3311}- \psi_{0021}\psi_{3312}+
   \psi_{0020}\psi_{3313}\nonumber\\&&+ \psi_{0013}\psi_{3320}- \psi_{0012}\psi_{3321}+ \psi_{0011}\psi_{3322}-
   \psi_{0010}\psi_{3323}- \psi_{0003}\psi_{3330}+ \psi_{0002}\psi_{3331}- \psi_{0001}\psi_{3332}+
   \psi_{0000}\psi_{3333}),)tex"},
        {"H_c", R"tex(  H_c = 2(&&-\psi_{0113}\psi_{1000}+ \psi_{0112}\psi_{1001}- \psi_{0111}\psi_{1002}+
   \psi_{0110}\psi_{1003}+ \psi_{0103}\psi_{1010}- \psi_{0102}\psi_{1011}+ \psi_{0101}\psi_{1012}-
   \psi_{0100}\psi_{1013}\nonumber\\&&- \psi_{0133}\psi_{1020}+ \psi_{0132}\psi_{1021}- \psi_{0131}\psi_{1022}+
   \psi_{0130}\psi_{1023}+ \psi_{0123}\psi_{1030}- \psi_{0122}\psi_{1031}+ \psi_{0121}\psi_{1032}-
   \psi_{0120}\psi_{1033}\nonumber\\&&+ \psi_{0013}\psi_{1100}- \psi_{0012}\psi_{1101}+ \psi_{0011}\psi_{1102}-
   \psi_{0010}\psi_{1103}- \psi_{0003}\psi_{1110}+ \psi_{0002}\psi_{1111}- \psi_{0001}\psi_{1112}+
   \psi_{0000}\psi_{1113}\nonumber\\&&+ \psi_{0033}\psi_{1120}- \psi_{0032}\psi_{1121}+ \psi_{0031}\psi_{1122}-
   \psi_{0030}\psi_{1123}- \psi_{0023}\psi_{1130}+ \psi_{0022}\psi_{1131}- \psi_{0021}\psi_{1132}+
   \psi_{0020}\psi_{1133}\nonumber\\&&- \psi_{0313}\psi_{1200}+ \psi_{0312}\psi_{1201}- \psi_{0311}\psi_{1202}+
   \psi_{0310}\psi_{1203}+ \psi_{0303}\psi_{1210}- \psi_{0302}\psi_{1211}+ \psi_{0301}\psi_{1212}-
   \psi_{0300}\psi_{1213}\nonumber\\&&- \psi_{0333}\psi_{1220}+ \psi_{0332}\psi_{1221}- \psi_{0331}\psi_{1222}+
   \psi_{0330}\psi_{1223}+ \psi_{0323}\psi_{1230}- \psi_{0322}\psi_{1231}+ \psi_{0321}\psi_{1232}-
   \psi_{0320}\psi_{1233}\nonumber\\&&+ \psi_{0213}\psi_{1300}- \psi_{0212}\psi_{1301}+ \psi_{0211}\psi_{1302}-
   \psi_{0210}\psi_{1303}- \psi_{0203}\psi_{1310}+ \psi_{0202}\psi_{1311}- \psi_{0201}\psi_{1312}+
   \psi_{0200}\psi_{1313}\nonumber\\&&+ \psi_{0233}\psi_{1320}- \psi_{0232}\psi_{1321}+ \psi_{0231}\psi_{1322}-
   \psi_{0230}\psi_{1323}- \psi_{0223}\psi_{1330}+ \psi_{0222}\psi_{1331}- \psi_{0221}\psi_{1332}+
   \psi_{0220}\psi_{1333}\nonumber\\&&- \psi_{2113}\psi_{3000}+ \psi_{2112}\psi_{3001}- \psi_{2111}\psi_{3002}+
   \psi_{2110}\psi_{3003}+ \psi_{2103}\psi_{3010}- \psi_{2102}\psi_{3011}+ \psi_{2101}\psi_{3012}-
   \psi_{2100}\psi_{3013}\nonumber\\&&- \psi_{2133}\psi_{3020}+ \psi_{2132}\psi_{3021}- \psi_{2131}\psi_{3022}+
   \psi_{2130}\psi_{3023}+ \psi_{2123}\psi_{3030}- \psi_{2122}\psi_{3031}+ \psi_{2121}\psi_{3032}-
   \psi_{2120}\psi_{3033}\nonumber\\&&+ \psi_{2013}\psi_{3100}- \psi_{2012}\psi_{3101}+ \psi_{2011}\psi_{3102}-
   \psi_{2010}\psi_{3103}- \psi_{2003}\psi_{3110}+ \psi_{2002}\psi_{3111}- \psi_{2001}\psi_{3112}+
   \psi_{2000}\psi_{3113}\nonumber\\&&+ \psi_{2033}\psi_{3120}- \psi_{2032}\psi_{3121}+ \psi_{2031}\psi_{3122}-
   \psi_{2030}\psi_{3123}- \psi_{2023}\psi_{3130}+ \psi_{2022}\psi_{3131}- \psi_{2021}\psi_{3132}+
   \psi_{2020}\psi_{3133}\nonumber\\&&- \psi_{2313}\psi_{3200}+ \psi_{2312}\psi_{3201}- \psi_{2311}\psi_{3202}+
   \psi_{2310}\psi_{3203}+ \psi_{2303}\psi_{3210}- \psi_{2302}\psi_{3211}+ \psi_{2301}\psi_{3212}-
   \psi_{2300}\psi_{3213}\nonumber\\&&- \psi_{2333}\psi_{3220}+ \psi_{2332}\psi_{3221}- \psi_{2331}\psi_{3222}+
   \psi_{2330}\psi_{3223}+ \psi_{2323}\psi_{3230}- \psi_{2322}\psi_{3231}+ \psi_{2321}\psi_{3232}-
   \psi_{2320}\psi_{3233}\nonumber\\&&+ \psi_{2213}\psi_{3300}- \psi_{2212}\psi_{3301}+ \psi_{2211}\psi_{3302}-
   \psi_{2210}\psi_{3303}- \psi_{2203}\psi_{3310}+ \psi_{2202}\psi_{3311}- \psi_{2201}\psi_{3312}+
   \psi_{2200}\psi_{3313}\nonumber\\&&+ \psi_{2233}\psi_{3320}- \psi_{2232}\psi_{3321}+ \psi_{2231}\psi_{3322}-
   \psi_{2230}\psi_{3323}- \psi_{2223}\psi_{3330}+ \psi_{2222}\psi_{3331}- \psi_{2221}\psi_{3332}+
   \psi_{2220}\psi_{3333}),)tex"},
        {"H_d", R"tex(   H_d = 2(&&- \psi_{0131}\psi_{1000}+\psi_{0130}\psi_{1001}-\psi_{0133}\psi_{1002}+
  \psi_{0132}\psi_{1003}+\psi_{0121}\psi_{1010}-\psi_{0120}\psi_{1011}+\psi_{0123}\psi_{1012}-
  \psi_{0122}\psi_{1013}\nonumber\\&&-\psi_{0111}\psi_{1020}+\psi_{0110}\psi_{1021}-\psi_{0113}\psi_{1022}+
  \psi_{0112}\psi_{1023}+\psi_{0101}\psi_{1030}-\psi_{0100}\psi_{1031}+\psi_{0103}\psi_{1032}-
  \psi_{0102}\psi_{1033}\nonumber\\&&+\psi_{0031}\psi_{1100}-\psi_{0030}\psi_{1101}+\psi_{0033}\psi_{1102}-
  \psi_{0032}\psi_{1103}-\psi_{0021}\psi_{1110}+\psi_{0020}\psi_{1111}-\psi_{0023}\psi_{1112}+
  \psi_{0022}\psi_{1113}\nonumber\\&&+\psi_{0011}\psi_{1120}-\psi_{0010}\psi_{1121}+\psi_{0013}\psi_{1122}-
  \psi_{0012}\psi_{1123}-\psi_{0001}\psi_{1130}+\psi_{0000}\psi_{1131}-\psi_{0003}\psi_{1132}+
  \psi_{0002}\psi_{1133}\nonumber\\&&-\psi_{0331}\psi_{1200}+\psi_{0330}\psi_{1201}-\psi_{0333}\psi_{1202}+
  \psi_{0332}\psi_{1203}+\psi_{0321}\psi_{1210}-\psi_{0320}\psi_{1211}+\psi_{0323}\psi_{1212}-
  \psi_{0322}\psi_{1213}\nonumber\\&&-\psi_{0311}\psi_{1220}+\psi_{0310}\psi_{1221}-\psi_{0313}\psi_{1222}+
  \psi_{0312}\psi_{1223}+\psi_{0301}\psi_{1230}-\psi_{0300}\psi_{1231}+\psi_{0303}\psi_{1232}-
  \psi_{0302}\psi_{1233}\nonumber\\&&+\psi_{0231}\psi_{1300}-\psi_{0230}\psi_{1301}+\psi_{0233}\psi_{1302}-
  \psi_{0232}\psi_{1303}-\psi_{0221}\psi_{1310}+\psi_{0220}\psi_{1311}-\psi_{0223}\psi_{1312}+
  \psi_{0222}\psi_{1313}\nonumber\\&&+\psi_{0211}\psi_{1320}-\psi_{0210}\psi_{1321}+\psi_{0213}\psi_{1322}-
  \psi_{0212}\psi_{1323}-\psi_{0201}\psi_{1330}+\psi_{0200}\psi_{1331}-\psi_{0203}\psi_{1332}+
  \psi_{0202}\psi_{1333}\nonumber\\&&-\psi_{2131}\psi_{3000}+\psi_{2130}\psi_{3001}-\psi_{2133}\psi_{3002}+
  \psi_{2132}\psi_{3003}+\psi_{2121}\psi_{3010}-\psi_{2120}\psi_{3011}+\psi_{2123}\psi_{3012}-
  \psi_{2122}\psi_{3013}\nonumber\\&&-\psi_{2111}\psi_{3020}+\psi_{2110}\psi_{3021}-\psi_{2113}\psi_{3022}+
  \psi_{2112}\psi_{3023}+\psi_{2101}\psi_{3030}-\psi_{2100}\psi_{3031}+\psi_{2103}\psi_{3032}-
  \psi_{2102}\psi_{3033}\nonumber\\&&+\psi_{2031}\psi_{3100}-\psi_{2030}\psi_{3101}+\psi_{2033}\psi_{3102}-
  \psi_{2032}\psi_{3103}-\psi_{2021}\psi_{3110}+\psi_{2020}\psi_{3111}-\psi_{2023}\psi_{3112}+
  \psi_{2022}\psi_{3113}\nonumber\\&&+\psi_{2011}\psi_{3120}-\psi_{2010}\psi_{3121}+\psi_{2013}\psi_{3122}-
  \psi_{2012}\psi_{3123}-\psi_{2001}\psi_{3130}+\psi_{2000}\psi_{3131}-\psi_{2003}\psi_{3132}+
  \psi_{2002}\psi_{3133}\nonumber\\&&-\psi_{2331}\psi_{3200}+\psi_{2330}\psi_{3201}-\psi_{2333}\psi_{3202}+
  \psi_{2332}\psi_{3203}+\psi_{2321}\psi_{3210}-\psi_{2320}\psi_{3211}+\psi_{2323}\psi_{3212}-
  \psi_{2322}\psi_{3213}\nonumber\\&&-\psi_{2311}\psi_{3220}+\psi_{2310}\psi_{3221}-\psi_{2313}\psi_{3222}+
  \psi_{2312}\psi_{3223}+\psi_{2301}\psi_{3230}-\psi_{2300}\psi_{3231}+\psi_{2303}\psi_{3232}-
  \psi_{2302}\psi_{3233}\nonumber\\&&+\psi_{2231}\psi_{3300}-\psi_{2230}\psi_{3301}+\psi_{2233}\psi_{3302}-
  \psi_{2232}\psi_{3303}-\psi_{2221}\psi_{3310}+\psi_{2220}\psi_{3311}-\psi_{2223}\psi_{3312}+
  \psi_{2222}\psi_{3313}\nonumber\\&&+\psi_{2211}\psi_{3320}-\psi_{2210}\psi_{3321}+\psi_{2213}\psi_{3322}-
  \psi_{2212}\psi_{3323}-\psi_{2201}\psi_{3330}+\psi_{2200}\psi_{3331}-\psi_{2203}\psi_{3332}+
  \psi_{2202}\psi_{3333}).)tex"},
        {"T_l", R"tex( T_l= 2 ( &&\psi_{0111}\psi_{1000}-  \psi_{0110}\psi_{1001}+  \psi_{0113}\psi_{1002}-  \psi_{0112}\psi_{1003}-
     \psi_{0101}\psi_{1010}+  \psi_{0100}\psi_{1011}-  \psi_{0103}\psi_{1012}+  \psi_{0102}\psi_{1013}\nonumber\\&&-
     \psi_{0011}\psi_{1100}+  \psi_{0010}\psi_{1101}-  \psi_{0013}\psi_{1102}+  \psi_{0012}\psi_{1103}+
     \psi_{0001}\psi_{1110}-  \psi_{0000}\psi_{1111}+  \psi_{0003}\psi_{1112}-  \psi_{0002}\psi_{1113}\nonumber\\&&+
     \psi_{0311}\psi_{1200}-  \psi_{0310}\psi_{1201}+  \psi_{0313}\psi_{1202}-  \psi_{0312}\psi_{1203}-
     \psi_{0301}\psi_{1210}+  \psi_{0300}\psi_{1211}-  \psi_{0303}\psi_{1212}+  \psi_{0302}\psi_{1213}\nonumber\\&&-
     \psi_{0211}\psi_{1300}+  \psi_{0210}\psi_{1301}-  \psi_{0213}\psi_{1302}+  \psi_{0212}\psi_{1303}+
     \psi_{0201}\psi_{1310}-  \psi_{0200}\psi_{1311}+  \psi_{0203}\psi_{1312}-  \psi_{0202}\psi_{1313}\nonumber\\&&+
     \psi_{2111}\psi_{3000}-  \psi_{2110}\psi_{3001}+  \psi_{2113}\psi_{3002}-  \psi_{2112}\psi_{3003}-
     \psi_{2101}\psi_{3010}+  \psi_{2100}\psi_{3011}-  \psi_{2103}\psi_{3012}+  \psi_{2102}\psi_{3013}\nonumber\\&&-
     \psi_{2011}\psi_{3100}+  \psi_{2010}\psi_{3101}-  \psi_{2013}\psi_{3102}+  \psi_{2012}\psi_{3103}+
     \psi_{2001}\psi_{3110}-  \psi_{2000}\psi_{3111}+  \psi_{2003}\psi_{3112}-  \psi_{2002}\psi_{3113}\nonumber\\&&+
     \psi_{2311}\psi_{3200}-  \psi_{2310}\psi_{3201}+  \psi_{2313}\psi_{3202}-  \psi_{2312}\psi_{3203}-
     \psi_{2301}\psi_{3210}+  \psi_{2300}\psi_{3211}-  \psi_{2303}\psi_{3212}+  \psi_{2302}\psi_{3213}\nonumber\\&&-
     \psi_{2211}\psi_{3300}+  \psi_{2210}\psi_{3301}-  \psi_{2213}\psi_{3302}+  \psi_{2212}\psi_{3303}+
     \psi_{2201}\psi_{3310}-  \psi_{2200}\psi_{3311}+  \psi_{2203}\psi_{3312}-
     \psi_{2202}\psi_{3313})^2\nonumber\\ +
 2 ( &&\psi_{0131}\psi_{1020}-  \psi_{0130}\psi_{1021}+  \psi_{0133}\psi_{1022}-  \psi_{0132}\psi_{1023}-
     \psi_{0121}\psi_{1030}+  \psi_{0120}\psi_{1031}-  \psi_{0123}\psi_{1032}+  \psi_{0122}\psi_{1033}\nonumber\\&&-
     \psi_{0031}\psi_{1120}+  \psi_{0030}\psi_{1121}-  \psi_{0033}\psi_{1122}+  \psi_{0032}\psi_{1123}+
     \psi_{0021}\psi_{1130}-  \psi_{0020}\psi_{1131}+  \psi_{0023}\psi_{1132}-  \psi_{0022}\psi_{1133}\nonumber\\&&+
     \psi_{0331}\psi_{1220}-  \psi_{0330}\psi_{1221}+  \psi_{0333}\psi_{1222}-  \psi_{0332}\psi_{1223}-
     \psi_{0321}\psi_{1230}+  \psi_{0320}\psi_{1231}-  \psi_{0323}\psi_{1232}+  \psi_{0322}\psi_{1233}\nonumber\\&&-
     \psi_{0231}\psi_{1320}+  \psi_{0230}\psi_{1321}-  \psi_{0233}\psi_{1322}+  \psi_{0232}\psi_{1323}+
     \psi_{0221}\psi_{1330}-  \psi_{0220}\psi_{1331}+  \psi_{0223}\psi_{1332}-  \psi_{0222}\psi_{1333}\nonumber\\&&+
     \psi_{2131}\psi_{3020}-  \psi_{2130}\psi_{3021}+  \psi_{2133}\psi_{3022}-  \psi_{2132}\psi_{3023}-
     \psi_{2121}\psi_{3030}+  \psi_{2120}\psi_{3031}-  \psi_{2123}\psi_{3032}+  \psi_{2122}\psi_{3033}\nonumber\\&&-
     \psi_{2031}\psi_{3120}+  \psi_{2030}\psi_{3121}-  \psi_{2033}\psi_{3122}+  \psi_{2032}\psi_{3123}+
     \psi_{2021}\psi_{3130}-  \psi_{2020}\psi_{3131}+  \psi_{2023}\psi_{3132}-  \psi_{2022}\psi_{3133}\nonumber\\&&+
     \psi_{2331}\psi_{3220}-  \psi_{2330}\psi_{3221}+  \psi_{2333}\psi_{3222}-  \psi_{2332}\psi_{3223}-
     \psi_{2321}\psi_{3230}+  \psi_{2320}\psi_{3231}-  \psi_{2323}\psi_{3232}+  \psi_{2322}\psi_{3233}\nonumber\\&&-
     \psi_{2231}\psi_{3320}+  \psi_{2230}\psi_{3321}-  \psi_{2233}\psi_{3322}+  \psi_{2232}\psi_{3323}+
     \psi_{2221}\psi_{3330}-  \psi_{2220}\psi_{3331}+  \psi_{2223}\psi_{3332}-  \psi_{2222}\psi_{3333})^2\nonumber\\+
 4 (&&- \psi_{0121}\psi_{1010}+  \psi_{0120}\psi_{1011}-  \psi_{0123}\psi_{1012}+  \psi_{0122}\psi_{1013}+
     \psi_{0111}\psi_{1020}-  \psi_{0110}\psi_{1021}+  \psi_{0113}\psi_{1022}-  \psi_{0112}\psi_{1023}\nonumber\\&&+
     \psi_{0021}\psi_{1110}-  \psi_{0020}\psi_{1111}+  \psi_{0023}\psi_{1112}-  \psi_{0022}\psi_{1113}-
     \psi_{0011}\psi_{1120}+  \psi_{0010}\psi_{1121}-  \psi_{0013}\psi_{1122}+  \psi_{0012}\psi_{1123}\nonumber\\&&-
     \psi_{0321}\psi_{1210}+  \psi_{0320}\psi_{1211}-  \psi_{0323}\psi_{1212}+  \psi_{0322}\psi_{1213}+
     \psi_{0311}\psi_{1220}-  \psi_{0310}\psi_{1221}+  \psi_{0313}\psi_{1222}-  \psi_{0312}\psi_{1223}\nonumber\\&&+
     \psi_{0221}\psi_{1310}-  \psi_{0220}\psi_{1311}+  \psi_{0223}\psi_{1312}-  \psi_{0222}\psi_{1313}-
     \psi_{0211}\psi_{1320}+  \psi_{0210}\psi_{1321}-  \psi_{0213}\psi_{1322}+  \psi_{0212}\psi_{1323}\nonumber\\&&-
     \psi_{2121}\psi_{3010}+  \psi_{2120}\psi_{3011}-  \psi_{2123}\psi_{3012}+  \psi_{2122}\psi_{3013}+
     \psi_{2111}\psi_{3020}-  \psi_{2110}\psi_{3021}+  \psi_{2113}\psi_{3022}-  \psi_{2112}\psi_{3023}\nonumber\\&&+
     \psi_{2021}\psi_{3110}-  \psi_{2020}\psi_{3111}+  \psi_{2023}\psi_{3112}-  \psi_{2022}\psi_{3113}-
     \psi_{2011}\psi_{3120}+  \psi_{2010}\psi_{3121}-  \psi_{2013}\psi_{3122}+  \psi_{2012}\psi_{3123}\nonumber\\&&-
     \psi_{2321}\psi_{3210}+  \psi_{2320}\psi_{3211}-  \psi_{2323}\psi_{3212}+  \psi_{2322}\psi_{3213}+
     \psi_{2311}\psi_{3220}-  \psi_{2310}\psi_{3221}+  \psi_{2313}\psi_{3222}-  \psi_{2312}\psi_{3223}\nonumber\\&&+
     \psi_{2221}\psi_{3310}-  \psi_{2220}\psi_{3311}+  \psi_{2223}\psi_{3312}-  \psi_{2222}\psi_{3313}-
     \psi_{2211}\psi_{3320}+  \psi_{2210}\psi_{3321}-  \psi_{2213}\psi_{3322}+
     \psi_{2212}\psi_{3323})\nonumber\\\times ( &&\psi_{0131}\psi_{1000}-  \psi_{0130}\psi_{1001}+  \psi_{0133}\psi_{1002}-
     \psi_{0132}\psi_{1003}-  \psi_{0101}\psi_{1030}+  \psi_{0100}\psi_{1031}-  \psi_{0103}\psi_{1032}+
     \psi_{0102}\psi_{1033}\nonumber\\&&-  \psi_{0031}\psi_{1100}+  \psi_{0030}\psi_{1101}-  \psi_{0033}\psi_{1102}+
     \psi_{0032}\psi_{1103}+  \psi_{0001}\psi_{1130}-  \psi_{0000}\psi_{1131}+  \psi_{0003}\psi_{1132}-
     \psi_{0002}\psi_{1133}\nonumber\\&&+  \psi_{0331}\psi_{1200}-  \psi_{0330}\psi_{1201}+  \psi_{0333}\psi_{1202}-
     \psi_{0332}\psi_{1203}-  \psi_{0301}\psi_{1230}+  \psi_{0300}\psi_{1231}-  \psi_{0303}\psi_{1232}+
     \psi_{0302}\psi_{1233}\nonumber\\&&-  \psi_{0231}\psi_{1300}+  \psi_{0230}\psi_{1301}-  \psi_{0233}\psi_{1302}+
     \psi_{0232}\psi_{1303}+  \psi_{0201}\psi_{1330}-  \psi_{0200}\psi_{1331}+  \psi_{0203}\psi_{1332}-
     \psi_{0202}\psi_{1333}\nonumber\\&&+  \psi_{2131}\psi_{3000}-  \psi_{2130}\psi_{3001}+  \psi_{2133}\psi_{3002}-
     \psi_{2132}\psi_{3003}-  \psi_{2101}\psi_{3030}+  \psi_{2100}\psi_{3031}-  \psi_{2103}\psi_{3032}+
     \psi_{2102}\psi_{3033}\nonumber\\&&-  \psi_{2031}\psi_{3100}+  \psi_{2030}\psi_{3101}-  \psi_{2033}\psi_{3102}+
     \psi_{2032}\psi_{3103}+  \psi_{2001}\psi_{3130}-  \psi_{2000}\psi_{3131}+  \psi_{2003}\psi_{3132}-
     \psi_{2002}\psi_{3133}\nonumber\\&&+  \psi_{2331}\psi_{3200}-  \psi_{2330}\psi_{3201}+  \psi_{2333}\psi_{3202}-
     \psi_{2332}\psi_{3203}-  \psi_{2301}\psi_{3230}+  \psi_{2300}\psi_{3231}-  \psi_{2303}\psi_{3232}+
     \psi_{2302}\psi_{3233}\nonumber\\&&-  \psi_{2231}\psi_{3300}+  \psi_{2230}\psi_{3301}-  \psi_{2233}\psi_{3302}+
     \psi_{2232}\psi_{3303}+  \psi_{2201}\psi_{3330}-  \psi_{2200}\psi_{3331}+  \psi_{2203}\psi_{3332}-
     \psi_{2202}\psi_{3333})\nonumber\\ +
 4 ( &&\psi_{0121}\psi_{1000}-  \psi_{0120}\psi_{1001}+  \psi_{0123}\psi_{1002}-  \psi_{0122}\psi_{1003}-
     \psi_{0101}\psi_{1020}+  \psi_{0100}\psi_{1021}-  \psi_{0103}\psi_{1022}+  \psi_{0102}\psi_{1023}\nonumber\\&&-
     \psi_{0021}\psi_{1100}+  \psi_{0020}\psi_{1101}-  \psi_{0023}\psi_{1102}+  \psi_{0022}\psi_{1103}+
     \psi_{0001}\psi_{1120}-  \psi_{0000}\psi_{1121}+  \psi_{0003}\psi_{1122}-  \psi_{0002}\psi_{1123}\nonumber\\&&+
     \psi_{0321}\psi_{1200}-  \psi_{0320}\psi_{1201}+  \psi_{0323}\psi_{1202}-  \psi_{0322}\psi_{1203}-
     \psi_{0301}\psi_{1220}+  \psi_{0300}\psi_{1221}-  \psi_{0303}\psi_{1222}+  \psi_{0302}\psi_{1223}\nonumber\\&&-
     \psi_{0221}\psi_{1300}+  \psi_{0220}\psi_{1301}-  \psi_{0223}\psi_{1302}+  \psi_{0222}\psi_{1303}+
     \psi_{0201}\psi_{1320}-  \psi_{0200}\psi_{1321}+  \psi_{0203}\psi_{1322}-  \psi_{0202}\psi_{1323}\nonumber\\&&+
     \psi_{2121}\psi_{3000}-  \psi_{2120}\psi_{3001}+  \psi_{2123}\psi_{3002}-  \psi_{2122}\psi_{3003}-
     \psi_{2101}\psi_{3020}+  \psi_{2100}\psi_{3021}-  \psi_{2103}\psi_{3022}+  \psi_{2102}\psi_{3023}\nonumber\\&&-
     \psi_{2021}\psi_{3100}+  \psi_{2020}\psi_{3101}-  \psi_{2023}\psi_{3102}+  \psi_{2022}\psi_{3103}+
     \psi_{2001}\psi_{3120}-  \psi_{2000}\psi_{3121}+  \psi_{2003}\psi_{3122}-  \psi_{2002}\psi_{3123}\nonumber\\&&+
     \psi_{2321}\psi_{3200}-  \psi_{2320}\psi_{3201}+  \psi_{2323}\psi_{3202}-  \psi_{2322}\psi_{3203}-
     \psi_{2301}\psi_{3220}+  \psi_{2300}\psi_{3221}-  \psi_{2303}\psi_{3222}+  \psi_{2302}\psi_{3223}\nonumber\\&&-
     \psi_{2221}\psi_{3300}+  \psi_{2220}\psi_{3301}-  \psi_{2223}\psi_{3302}+  \psi_{2222}\psi_{3303}+
     \psi_{2201}\psi_{3320}-  \psi_{2200}\psi_{3321}+  \psi_{2203}\psi_{3322}-
     \psi_{2202}\psi_{3323})\nonumber\\\times ( &&\psi_{0131}\psi_{1010}-  \psi_{0130}\psi_{1011}+  \psi_{0133}\psi_{1012}-
     \psi_{0132}\psi_{1013}-  \psi_{0111}\psi_{1030}+  \psi_{0110}\psi_{1031}-  \psi_{0113}\psi_{1032}+
     \psi_{0112}\psi_{1033}\nonumber\\&&-  \psi_{0031}\psi_{1110}+  \psi_{0030}\psi_{1111}-  \psi_{0033}\psi_{1112}+
     \psi_{0032}\psi_{1113}+  \psi_{0011}\psi_{1130}-  \psi_{0010}\psi_{1131}+  \psi_{0013}\psi_{1132}-
     \psi_{0012}\psi_{1133}\nonumber\\&&+  \psi_{0331}\psi_{1210}-  \psi_{0330}\psi_{1211}+  \psi_{0333}\psi_{1212}-
     \psi_{0332}\psi_{1213}-  \psi_{0311}\psi_{1230}+  \psi_{0310}\psi_{1231}-  \psi_{0313}\psi_{1232}+
     \psi_{0312}\psi_{1233}\nonumber\\&&-  \psi_{0231}\psi_{1310}+  \psi_{0230}\psi_{1311}-  \psi_{0233}\psi_{1312}+
     \psi_{0232}\psi_{1313}+  \psi_{0211}\psi_{1330}-  \psi_{0210}\psi_{1331}+  \psi_{0213}\psi_{1332}-
     \psi_{0212}\psi_{1333}\nonumber\\&&+  \psi_{2131}\psi_{3010}-  \psi_{2130}\psi_{3011}+  \psi_{2133}\psi_{3012}-
     \psi_{2132}\psi_{3013}-  \psi_{2111}\psi_{3030}+  \psi_{2110}\psi_{3031}-  \psi_{2113}\psi_{3032}+
     \psi_{2112}\psi_{3033}\nonumber\\&&-  \psi_{2031}\psi_{3110}+  \psi_{2030}\psi_{3111}-  \psi_{2033}\psi_{3112}+
     \psi_{2032}\psi_{3113}+  \psi_{2011}\psi_{3130}-  \psi_{2010}\psi_{3131}+  \psi_{2013}\psi_{3132}-
     \psi_{2012}\psi_{3133}\nonumber\\&&+  \psi_{2331}\psi_{3210}-  \psi_{2330}\psi_{3211}+  \psi_{2333}\psi_{3212}-
     \psi_{2332}\psi_{3213}-  \psi_{2311}\psi_{3230}+  \psi_{2310}\psi_{3231}-  \psi_{2313}\psi_{3232}+
     \psi_{2312}\psi_{3233}\nonumber\\&&-  \psi_{2231}\psi_{3310}+  \psi_{2230}\psi_{3311}-  \psi_{2233}\psi_{3312}+
     \psi_{2232}\psi_{3313}+  \psi_{2211}\psi_{3330}-  \psi_{2210}\psi_{3331}+  \psi_{2213}\psi_{3332}-
     \psi_{2212}\psi_{3333}),  )tex"},
        {"Y_l", R"tex( Y_l=2 (&&- \psi_{1323}\psi_{2010}+  \psi_{1322}\psi_{2011}-  \psi_{1321}\psi_{2012}+  \psi_{1320}\psi_{2013}+
     \psi_{1313}\psi_{2020}-  \psi_{1312}\psi_{2021}+  \psi_{1311}\psi_{2022}-  \psi_{1310}\psi_{2023}\nonumber\\&&+
     \psi_{1223}\psi_{2110}-  \psi_{1222}\psi_{2111}+  \psi_{1221}\psi_{2112}-  \psi_{1220}\psi_{2113}-
     \psi_{1213}\psi_{2120}+  \psi_{1212}\psi_{2121}-  \psi_{1211}\psi_{2122}+  \psi_{1210}\psi_{2123}\nonumber\\&&-
     \psi_{1123}\psi_{2210}+  \psi_{1122}\psi_{2211}-  \psi_{1121}\psi_{2212}+  \psi_{1120}\psi_{2213}+
     \psi_{1113}\psi_{2220}-  \psi_{1112}\psi_{2221}+  \psi_{1111}\psi_{2222}-  \psi_{1110}\psi_{2223}\nonumber\\&&+
     \psi_{1023}\psi_{2310}-  \psi_{1022}\psi_{2311}+  \psi_{1021}\psi_{2312}-  \psi_{1020}\psi_{2313}-
     \psi_{1013}\psi_{2320}+  \psi_{1012}\psi_{2321}-  \psi_{1011}\psi_{2322}+  \psi_{1010}\psi_{2323}\nonumber\\&&+
     \psi_{0323}\psi_{3010}-  \psi_{0322}\psi_{3011}+  \psi_{0321}\psi_{3012}-  \psi_{0320}\psi_{3013}-
     \psi_{0313}\psi_{3020}+  \psi_{0312}\psi_{3021}-  \psi_{0311}\psi_{3022}+  \psi_{0310}\psi_{3023}\nonumber\\&&-
     \psi_{0223}\psi_{3110}+  \psi_{0222}\psi_{3111}-  \psi_{0221}\psi_{3112}+  \psi_{0220}\psi_{3113}+
     \psi_{0213}\psi_{3120}-  \psi_{0212}\psi_{3121}+  \psi_{0211}\psi_{3122}-  \psi_{0210}\psi_{3123}\nonumber\\&&+
     \psi_{0123}\psi_{3210}-  \psi_{0122}\psi_{3211}+  \psi_{0121}\psi_{3212}-  \psi_{0120}\psi_{3213}-
     \psi_{0113}\psi_{3220}+  \psi_{0112}\psi_{3221}-  \psi_{0111}\psi_{3222}+  \psi_{0110}\psi_{3223}\nonumber\\&&-
     \psi_{0023}\psi_{3310}+  \psi_{0022}\psi_{3311}-  \psi_{0021}\psi_{3312}+  \psi_{0020}\psi_{3313}+
     \psi_{0013}\psi_{3320}-  \psi_{0012}\psi_{3321}+  \psi_{0011}\psi_{3322}-
     \psi_{0010}\psi_{3323})^2\nonumber\\+
 2 (&&- \psi_{1333}\psi_{2000}+  \psi_{1332}\psi_{2001}-  \psi_{1331}\psi_{2002}+  \psi_{1330}\psi_{2003}+
     \psi_{1303}\psi_{2030}-  \psi_{1302}\psi_{2031}+  \psi_{1301}\psi_{2032}-  \psi_{1300}\psi_{2033}\nonumber\\&&+
     \psi_{1233}\psi_{2100}-  \psi_{1232}\psi_{2101}+  \psi_{1231}\psi_{2102}-  \psi_{1230}\psi_{2103}-
     \psi_{1203}\psi_{2130}+  \psi_{1202}\psi_{2131}-  \psi_{1201}\psi_{2132}+  \psi_{1200}\psi_{2133}\nonumber\\&&-
     \psi_{1133}\psi_{2200}+  \psi_{1132}\psi_{2201}-  \psi_{1131}\psi_{2202}+  \psi_{1130}\psi_{2203}+
     \psi_{1103}\psi_{2230}-  \psi_{1102}\psi_{2231}+  \psi_{1101}\psi_{2232}-  \psi_{1100}\psi_{2233}\nonumber\\&&+
     \psi_{1033}\psi_{2300}-  \psi_{1032}\psi_{2301}+  \psi_{1031}\psi_{2302}-  \psi_{1030}\psi_{2303}-
     \psi_{1003}\psi_{2330}+  \psi_{1002}\psi_{2331}-  \psi_{1001}\psi_{2332}+  \psi_{1000}\psi_{2333}\nonumber\\&&+
     \psi_{0333}\psi_{3000}-  \psi_{0332}\psi_{3001}+  \psi_{0331}\psi_{3002}-  \psi_{0330}\psi_{3003}-
     \psi_{0303}\psi_{3030}+  \psi_{0302}\psi_{3031}-  \psi_{0301}\psi_{3032}+  \psi_{0300}\psi_{3033}\nonumber\\&&-
     \psi_{0233}\psi_{3100}+  \psi_{0232}\psi_{3101}-  \psi_{0231}\psi_{3102}+  \psi_{0230}\psi_{3103}+
     \psi_{0203}\psi_{3130}-  \psi_{0202}\psi_{3131}+  \psi_{0201}\psi_{3132}-  \psi_{0200}\psi_{3133}\nonumber\\&&+
     \psi_{0133}\psi_{3200}-  \psi_{0132}\psi_{3201}+  \psi_{0131}\psi_{3202}-  \psi_{0130}\psi_{3203}-
     \psi_{0103}\psi_{3230}+  \psi_{0102}\psi_{3231}-  \psi_{0101}\psi_{3232}+  \psi_{0100}\psi_{3233}\nonumber\\&&-
     \psi_{0033}\psi_{3300}+  \psi_{0032}\psi_{3301}-  \psi_{0031}\psi_{3302}+  \psi_{0030}\psi_{3303}+
     \psi_{0003}\psi_{3330}-  \psi_{0002}\psi_{3331}+  \psi_{0001}\psi_{3332}-
     \psi_{0000}\psi_{3333})^2\nonumber\\+
 4 ( &&\psi_{1323}\psi_{2000}-  \psi_{1322}\psi_{2001}+  \psi_{1321}\psi_{2002}-  \psi_{1320}\psi_{2003}-
     \psi_{1303}\psi_{2020}+  \psi_{1302}\psi_{2021}-  \psi_{1301}\psi_{2022}+  \psi_{1300}\psi_{2023}\nonumber\\&&-
     \psi_{1223}\psi_{2100}+  \psi_{1222}\psi_{2101}-  \psi_{1221}\psi_{2102}+  \psi_{1220}\psi_{2103}+
     \psi_{1203}\psi_{2120}-  \psi_{1202}\psi_{2121}+  \psi_{1201}\psi_{2122}-  \psi_{1200}\psi_{2123}\nonumber\\&&+
     \psi_{1123}\psi_{2200}-  \psi_{1122}\psi_{2201}+  \psi_{1121}\psi_{2202}-  \psi_{1120}\psi_{2203}-
     \psi_{1103}\psi_{2220}+  \psi_{1102}\psi_{2221}-  \psi_{1101}\psi_{2222}+  \psi_{1100}\psi_{2223}\nonumber\\&&-
     \psi_{1023}\psi_{2300}+  \psi_{1022}\psi_{2301}-  \psi_{1021}\psi_{2302}+  \psi_{1020}\psi_{2303}+
     \psi_{1003}\psi_{2320}-  \psi_{1002}\psi_{2321}+  \psi_{1001}\psi_{2322}-  \psi_{1000}\psi_{2323}\nonumber\\&&-
     \psi_{0323}\psi_{3000}+  \psi_{0322}\psi_{3001}-  \psi_{0321}\psi_{3002}+  \psi_{0320}\psi_{3003}+
     \psi_{0303}\psi_{3020}-  \psi_{0302}\psi_{3021}+  \psi_{0301}\psi_{3022}-  \psi_{0300}\psi_{3023}\nonumber\\&&+
     \psi_{0223}\psi_{3100}-  \psi_{0222}\psi_{3101}+  \psi_{0221}\psi_{3102}-  \psi_{0220}\psi_{3103}-
     \psi_{0203}\psi_{3120}+  \psi_{0202}\psi_{3121}-  \psi_{0201}\psi_{3122}+  \psi_{0200}\psi_{3123}\nonumber\\&&-
     \psi_{0123}\psi_{3200}+  \psi_{0122}\psi_{3201}-  \psi_{0121}\psi_{3202}+  \psi_{0120}\psi_{3203}+
     \psi_{0103}\psi_{3220}-  \psi_{0102}\psi_{3221}+  \psi_{0101}\psi_{3222}-  \psi_{0100}\psi_{3223}\nonumber\\&&+
     \psi_{0023}\psi_{3300}-  \psi_{0022}\psi_{3301}+  \psi_{0021}\psi_{3302}-  \psi_{0020}\psi_{3303}-
     \psi_{0003}\psi_{3320}+  \psi_{0002}\psi_{3321}-  \psi_{0001}\psi_{3322}+
     \psi_{0000}\psi_{3323})\nonumber\\\times (&&- \psi_{1333}\psi_{2010}+  \psi_{1332}\psi_{2011}-  \psi_{1331}\psi_{2012}+
     \psi_{1330}\psi_{2013}+  \psi_{1313}\psi_{2030}-  \psi_{1312}\psi_{2031}+  \psi_{1311}\psi_{2032}-
     \psi_{1310}\psi_{2033}\nonumber\\&&+  \psi_{1233}\psi_{2110}-  \psi_{1232}\psi_{2111}+  \psi_{1231}\psi_{2112}-
     \psi_{1230}\psi_{2113}-  \psi_{1213}\psi_{2130}+  \psi_{1212}\psi_{2131}-  \psi_{1211}\psi_{2132}+
     \psi_{1210}\psi_{2133}\nonumber\\&&-  \psi_{1133}\psi_{2210}+  \psi_{1132}\psi_{2211}-  \psi_{1131}\psi_{2212}+
     \psi_{1130}\psi_{2213}+  \psi_{1113}\psi_{2230}-  \psi_{1112}\psi_{2231}+  \psi_{1111}\psi_{2232}-
     \psi_{1110}\psi_{2233}\nonumber\\&&+  \psi_{1033}\psi_{2310}-  \psi_{1032}\psi_{2311}+  \psi_{1031}\psi_{2312}-
     \psi_{1030}\psi_{2313}-  \psi_{1013}\psi_{2330}+  \psi_{1012}\psi_{2331}-  \psi_{1011}\psi_{2332}+
     \psi_{1010}\psi_{2333}\nonumber\\&&+  \psi_{0333}\psi_{3010}-  \psi_{0332}\psi_{3011}+  \psi_{0331}\psi_{3012}-
     \psi_{0330}\psi_{3013}-  \psi_{0313}\psi_{3030}+  \psi_{0312}\psi_{3031}-  \psi_{0311}\psi_{3032}+
     \psi_{0310}\psi_{3033}\nonumber\\&&-  \psi_{0233}\psi_{3110}+  \psi_{0232}\psi_{3111}-  \psi_{0231}\psi_{3112}+
     \psi_{0230}\psi_{3113}+  \psi_{0213}\psi_{3130}-  \psi_{0212}\psi_{3131}+  \psi_{0211}\psi_{3132}-
     \psi_{0210}\psi_{3133}\nonumber\\&&+  \psi_{0133}\psi_{3210}-  \psi_{0132}\psi_{3211}+  \psi_{0131}\psi_{3212}-
     \psi_{0130}\psi_{3213}-  \psi_{0113}\psi_{3230}+  \psi_{0112}\psi_{3231}-  \psi_{0111}\psi_{3232}+
     \psi_{0110}\psi_{3233}\nonumber\\&&-  \psi_{0033}\psi_{3310}+  \psi_{0032}\psi_{3311}-  \psi_{0031}\psi_{3312}+
     \psi_{0030}\psi_{3313}+  \psi_{0013}\psi_{3330}-  \psi_{0012}\psi_{3331}+  \psi_{0011}\psi_{3332}-
     \psi_{0010}\psi_{3333})\nonumber\\ +
 4 (&&- \psi_{1313}\psi_{2000}+  \psi_{1312}\psi_{2001}-  \psi_{1311}\psi_{2002}+  \psi_{1310}\psi_{2003}+
     \psi_{1303}\psi_{2010}-  \psi_{1302}\psi_{2011}+  \psi_{1301}\psi_{2012}-  \psi_{1300}\psi_{2013}\nonumber\\&&+
     \psi_{1213}\psi_{2100}-  \psi_{1212}\psi_{2101}+  \psi_{1211}\psi_{2102}-  \psi_{1210}\psi_{2103}-
     \psi_{1203}\psi_{2110}+  \psi_{1202}\psi_{2111}-  \psi_{1201}\psi_{2112}+  \psi_{1200}\psi_{2113}\nonumber\\&&-
     \psi_{1113}\psi_{2200}+  \psi_{1112}\psi_{2201}-  \psi_{1111}\psi_{2202}+  \psi_{1110}\psi_{2203}+
     \psi_{1103}\psi_{2210}-  \psi_{1102}\psi_{2211}+  \psi_{1101}\psi_{2212}-  \psi_{1100}\psi_{2213}\nonumber\\&&+
     \psi_{1013}\psi_{2300}-  \psi_{1012}\psi_{2301}+  \psi_{1011}\psi_{2302}-  \psi_{1010}\psi_{2303}-
     \psi_{1003}\psi_{2310}+  \psi_{1002}\psi_{2311}-  \psi_{1001}\psi_{2312}+  \psi_{1000}\psi_{2313}\nonumber\\&&+
     \psi_{0313}\psi_{3000}-  \psi_{0312}\psi_{3001}+  \psi_{0311}\psi_{3002}-  \psi_{0310}\psi_{3003}-
     \psi_{0303}\psi_{3010}+  \psi_{0302}\psi_{3011}-  \psi_{0301}\psi_{3012}+  \psi_{0300}\psi_{3013}\nonumber\\&&-
     \psi_{0213}\psi_{3100}+  \psi_{0212}\psi_{3101}-  \psi_{0211}\psi_{3102}+  \psi_{0210}\psi_{3103}+
     \psi_{0203}\psi_{3110}-  \psi_{0202}\psi_{3111}+  \psi_{0201}\psi_{3112}-  \psi_{0200}\psi_{3113}\nonumber\\&&+
     \psi_{0113}\psi_{3200}-  \psi_{0112}\psi_{3201}+  \psi_{0111}\psi_{3202}-  \psi_{0110}\psi_{3203}-
     \psi_{0103}\psi_{3210}+  \psi_{0102}\psi_{3211}-  \psi_{0101}\psi_{3212}+  \psi_{0100}\psi_{3213}\nonumber\\&&-
     \psi_{0013}\psi_{3300}+  \psi_{0012}\psi_{3301}-  \psi_{0011}\psi_{3302}+  \psi_{0010}\psi_{3303}+
     \psi_{0003}\psi_{3310}-  \psi_{0002}\psi_{3311}+  \psi_{0001}\psi_{3312}-
     \psi_{0000}\psi_{3313})\nonumber\\\times (&&- \psi_{1333}\psi_{2020}+  \psi_{1332}\psi_{2021}-  \psi_{1331}\psi_{2022}+
     \psi_{1330}\psi_{2023}+  \psi_{1323}\psi_{2030}-  \psi_{1322}\psi_{2031}+  \psi_{1321}\psi_{2032}-
     \psi_{1320}\psi_{2033}\nonumber\\&&+  \psi_{1233}\psi_{2120}-  \psi_{1232}\psi_{2121}+  \psi_{1231}\psi_{2122}-
     \psi_{1230}\psi_{2123}-  \psi_{1223}\psi_{2130}+  \psi_{1222}\psi_{2131}-  \psi_{1221}\psi_{2132}+
     \psi_{1220}\psi_{2133}\nonumber\\&&-  \psi_{1133}\psi_{2220}+  \psi_{1132}\psi_{2221}-  \psi_{1131}\psi_{2222}+
     \psi_{1130}\psi_{2223}+  \psi_{1123}\psi_{2230}-  \psi_{1122}\psi_{2231}+  \psi_{1121}\psi_{2232}-
     \psi_{1120}\psi_{2233}\nonumber\\&&+  \psi_{1033}\psi_{2320}-  \psi_{1032}\psi_{2321}+  \psi_{1031}\psi_{2322}-
     \psi_{1030}\psi_{2323}-  \psi_{1023}\psi_{2330}+  \psi_{1022}\psi_{2331}-  \psi_{1021}\psi_{2332}+
     \psi_{1020}\psi_{2333}\nonumber\\&&+  \psi_{0333}\psi_{3020}-  \psi_{0332}\psi_{3021}+  \psi_{0331}\psi_{3022}-
     \psi_{0330}\psi_{3023}-  \psi_{0323}\psi_{3030}+  \psi_{0322}\psi_{3031}-  \psi_{0321}\psi_{3032}+
     \psi_{0320}\psi_{3033}\nonumber\\&&-  \psi_{0233}\psi_{3120}+  \psi_{0232}\psi_{3121}-  \psi_{0231}\psi_{3122}+
     \psi_{0230}\psi_{3123}+  \psi_{0223}\psi_{3130}-  \psi_{0222}\psi_{3131}+  \psi_{0221}\psi_{3132}-
     \psi_{0220}\psi_{3133}\nonumber\\&&+  \psi_{0133}\psi_{3220}-  \psi_{0132}\psi_{3221}+  \psi_{0131}\psi_{3222}-
     \psi_{0130}\psi_{3223}-  \psi_{0123}\psi_{3230}+  \psi_{0122}\psi_{3231}-  \psi_{0121}\psi_{3232}+
     \psi_{0120}\psi_{3233}\nonumber\\&&-  \psi_{0033}\psi_{3320}+  \psi_{0032}\psi_{3321}-  \psi_{0031}\psi_{3322}+
     \psi_{0030}\psi_{3323}+  \psi_{0023}\psi_{3330}-  \psi_{0022}\psi_{3331}+  \psi_{0021}\psi_{3332}-
     \psi_{0020}\psi_{3333}). )tex"},
        {"three_tangle", R"tex(\tau=&& (\psi_{011}\psi_{ 100} -\psi_{ 010}\psi_{ 101} -\psi_{ 001}\psi_{ 110} +\psi_{ 000}\psi_{ 111})^2 \nonumber\\
&&- 4 (\psi_{ 001} \psi_{ 010} -\psi_{ 000 }\psi_{ 011}) (\psi_{ 101}\psi_{ 110} -\psi_{ 100}\psi_{ 111}).)tex"},
        {"six_tangle", R"tex(\tau_{1\dots 6}= &&\psi_{000000}\psi_{111111}-\psi_{011111}\psi_{100000} -\psi_{101111}\psi_{010000}\nonumber\\&&-\psi_{110111}\psi_{001000}-\psi_{111011}\psi_{000100}-\psi_{111101}\psi_{000010}\nonumber\\&&-\psi_{111110}\psi_{000001}+\psi_{001111}\psi_{110000}
+\psi_{010111}\psi_{101000}\nonumber\\&&+\psi_{011011}\psi_{100100}+\psi_{011101}\psi_{100010}+\psi_{011110}\psi_{100001}\nonumber\\&&+\psi_{100111}\psi_{011000}+\psi_{101011}\psi_{010100}+\psi_{101101}\psi_{010010}\nonumber\\&&+\psi_{101110}\psi_{010001}+\psi_{110011}\psi_{001100}
+\psi_{110101}\psi_{001010}\nonumber\\&&+\psi_{110110}\psi_{001001}+\psi_{111001}\psi_{000110}+\psi_{111010}\psi_{000101}\nonumber\\&&+\psi_{111100}\psi_{000011}-\psi_{111000}\psi_{000111}-\psi_{110100}\psi_{001011}\nonumber\\&&-\psi_{110010}\psi_{001101}-\psi_{110001}\psi_{001110}-\psi_{101100}\psi_{010011}\nonumber\\&&-\psi_{101010}\psi_{010101}-\psi_{101001}\psi_{010110}-\psi_{100110}\psi_{011001}\nonumber\\&&-\psi_{100101}\psi_{011010}-\psi_{100011}\psi_{011100}.)tex"},
    };
    return forms;
}

} // namespace spinv
