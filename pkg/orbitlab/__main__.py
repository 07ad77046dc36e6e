from orbitlab.main import main

main()
